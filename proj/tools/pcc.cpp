// pcc: check, certify, generate and render drawings.
// Exit status: 0 property holds, 1 property fails, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "pcc/certificate.hpp"
#include "pcc/checkers.hpp"
#include "pcc/construct.hpp"
#include "pcc/drawing.hpp"
#include "pcc/io.hpp"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

pcc::Drawing load(const std::string& path, unsigned threads) {
  pcc::DrawingData raw = pcc::read_drawing_file(path);
  pcc::ValidationResult r = pcc::validate_drawing(std::move(raw), {threads});
  if (!r.drawing) {
    pcc::Report rep;
    pcc::add_validation(rep, r.report);
    rep.set_holds(false);
    throw std::runtime_error("invalid drawing " + path + "\n" + rep.str());
  }
  return std::move(*r.drawing);
}

int finish(const pcc::Report& r) {
  std::cout << r.str();
  return r.holds() ? kHolds : kFails;
}

int emit_drawing(const pcc::DrawingData& d, const std::string& out) {
  std::string text = pcc::serialize_drawing(d);
  if (out.empty()) {
    std::cout << text;
    return kHolds;
  }
  pcc::write_text_file(out, text);
  pcc::Report r;
  r.add("vertices", static_cast<std::uint64_t>(d.vertices.size()));
  r.add("total_edges", static_cast<std::uint64_t>(d.edges.size()));
  r.add("written", out);
  return finish(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planarly connected crossing drawings: checks, certificates, generators"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  app.add_option("--threads", threads, "Cap on worker threads")->check(CLI::PositiveNumber);

  std::string file, out;
  unsigned k = 0;
  std::uint64_t budget = 10'000'000, seed = 0, n = 0;
  std::size_t m_target = pcc::kUnlimited;

  auto* check = app.add_subcommand("check", "PCC, simplicity and independent crossings");
  check->add_option("file", file)->required();

  auto* kpcc = app.add_subcommand("kpcc", "Crossing pairs joined by <= k crossing-free edges");
  kpcc->add_option("file", file)->required();
  kpcc->add_option("--k", k)->required();

  auto* quasi = app.add_subcommand("quasi", "Holds iff no k pairwise crossing edges");
  quasi->add_option("file", file)->required();
  quasi->add_option("--k", k)->required();

  auto* grid = app.add_subcommand("grid", "Holds iff no k-grid with distinct vertices");
  grid->add_option("file", file)->required();
  grid->add_option("--k", k)->required();
  grid->add_option("--budget", budget, "Search node budget");

  auto* certify = app.add_subcommand("certify", "Replay the linear edge bound");
  certify->add_option("file", file)->required();

  auto* construct = app.add_subcommand("construct", "Dense PCC construction with 9n - 54 edges");
  construct->add_option("--n", n)->required();
  construct->add_option("-o,--output", out);

  auto* star = app.add_subcommand("star", "K_n with a crossing-free star");
  star->add_option("--n", n)->required();
  star->add_option("--seed", seed);
  star->add_option("-o,--output", out);

  auto* random = app.add_subcommand("random", "Greedy random straight-line PCC drawing");
  random->add_option("--n", n)->required();
  random->add_option("--seed", seed);
  random->add_option("--m", m_target, "Stop after this many edges");
  random->add_option("-o,--output", out);

  auto* render = app.add_subcommand("render", "Write an SVG rendering");
  render->add_option("file", file)->required();
  render->add_option("-o,--output", out)->required();

  auto* stats = app.add_subcommand("stats", "Edge and crossing counts");
  stats->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) {
      pcc::Drawing d = load(file, threads);
      pcc::Report r;
      pcc::SimplicityResult s = pcc::is_simple(d);
      r.add("simple", s.simple);
      if (s.witness) {
        r.add("simple_witness", std::to_string(d.edge_id(s.witness->first)) + " " +
                                    std::to_string(d.edge_id(s.witness->second)));
      }
      pcc::PccReport loose = pcc::check_pcc(d, false);
      pcc::PccReport hyp = pcc::check_pcc(d, true);
      pcc::add_pcc(r, d, loose, "pcc");
      r.add("independent_crossings", hyp.holds);
      r.set_holds(s.simple && loose.holds && hyp.holds);
      return finish(r);
    }
    if (*kpcc) {
      pcc::Drawing d = load(file, threads);
      pcc::Report r;
      r.add("k", static_cast<std::uint64_t>(k));
      pcc::PccReport p = pcc::check_k_pcc(d, k);
      pcc::add_pcc(r, d, p, "kpcc");
      r.set_holds(p.holds);
      return finish(r);
    }
    if (*quasi) {
      pcc::Drawing d = load(file, threads);
      pcc::Report r;
      r.add("k", static_cast<std::uint64_t>(k));
      auto family = pcc::find_pairwise_crossing(d, k);
      r.add("family_found", family.has_value());
      if (family) r.add("family", pcc::edge_id_list(d, family->edges));
      r.set_holds(!family);
      return finish(r);
    }
    if (*grid) {
      pcc::Drawing d = load(file, threads);
      pcc::Report r;
      r.add("k", static_cast<std::uint64_t>(k));
      pcc::GridSearchResult g = pcc::find_grid(d, k, budget);
      r.add("outcome", std::string(pcc::to_string(g.outcome)));
      r.add("nodes", g.nodes);
      if (g.outcome == pcc::GridOutcome::Found) {
        r.add("first", pcc::edge_id_list(d, g.first));
        r.add("second", pcc::edge_id_list(d, g.second));
      }
      r.set_holds(g.outcome == pcc::GridOutcome::NotFound);
      return finish(r);
    }
    if (*certify) {
      pcc::Drawing d = load(file, threads);
      pcc::Report r;
      try {
        pcc::Certificate c = pcc::certify(d);
        pcc::add_certificate(r, d, c);
        r.set_holds(c.hypothesis_ok && c.valid());
      } catch (const pcc::LemmaViolation& e) {
        r.add("bound_violation", std::string(e.what()));
        r.set_holds(false);
      }
      return finish(r);
    }
    if (*construct) return emit_drawing(pcc::toth_construction(n), out);
    if (*star) return emit_drawing(pcc::star_complete(n, {seed}), out);
    if (*random) return emit_drawing(pcc::random_pcc_greedy(n, m_target, {seed}), out);
    if (*render) {
      pcc::Drawing d = load(file, threads);
      pcc::write_text_file(out, pcc::render_svg(d));
      pcc::Report r;
      r.add("edges", static_cast<std::uint64_t>(d.edge_count()));
      r.add("crossings", static_cast<std::uint64_t>(d.crossings().crossing_point_count()));
      r.add("written", out);
      return finish(r);
    }
    if (*stats) {
      pcc::Drawing d = load(file, threads);
      pcc::Report r;
      pcc::add_stats(r, d);
      return finish(r);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
