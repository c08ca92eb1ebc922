// lapsep: batch analysis of normalized graph Laplacians as density matrices.
// Subcommands: analyze, search, product, census. JSON goes to stdout, human
// diagnostics to stderr; exit codes for analyze encode the verdict.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lapsep/constructions.hpp"
#include "lapsep/entanglement.hpp"
#include "lapsep/experiments.hpp"
#include "lapsep/graph6.hpp"
#include "lapsep/graph_products.hpp"
#include "lapsep/json_io.hpp"
#include "lapsep/parallel.hpp"

namespace {

constexpr int kExitSeparable = 0;
constexpr int kExitEntangled = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitParse = 3;
constexpr int kExitDims = 4;
constexpr int kExitOther = 5;

bool has_suffix(const std::string& path, const std::string& suffix) {
  return path.size() >= suffix.size() &&
         path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
}

lapsep::Graph load_graph(const std::string& path, int n_hint) {
  std::ifstream in(path);
  if (!in) throw lapsep::Error("cannot open " + path);
  if (has_suffix(path, ".g6")) {
    const auto graphs = lapsep::read_graph6_stream(in);
    if (graphs.empty()) throw lapsep::BadGraph6Error("no graphs in " + path);
    if (graphs.size() > 1)
      std::cerr << "note: " << path << " holds " << graphs.size()
                << " graphs; using the first\n";
    return graphs.front();
  }
  return lapsep::read_edge_list(in, n_hint);
}

std::vector<lapsep::Graph> load_graph_stream(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lapsep::Error("cannot open " + path);
  if (has_suffix(path, ".g6")) return lapsep::read_graph6_stream(in);
  return {lapsep::read_edge_list(in)};
}

lapsep::DimVector parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) dims.push_back(std::stoi(item));
  return lapsep::DimVector(dims);
}

int status_exit_code(lapsep::Status s) {
  switch (s) {
    case lapsep::Status::Separable: return kExitSeparable;
    case lapsep::Status::Entangled: return kExitEntangled;
    case lapsep::Status::Undecided: return kExitUndecided;
  }
  return kExitOther;
}

struct Options {
  std::string command;
  std::string in_path;
  std::string dims_text;
  std::string labeling_path;
  std::string mask_text = "strong";
  std::string mode = "any";
  std::string experiment;
  std::vector<std::string> factor_paths;
  bool certify = false;
  int jobs = 1;
  int n_override = -1;
  int bipartite_n = 0;
  unsigned seed = 0;  // reserved for randomized self-checks
};

int run_analyze(const Options& opt) {
  const lapsep::DimVector dims = parse_dims(opt.dims_text);
  if (opt.n_override >= 0 && opt.n_override != dims.product())
    throw lapsep::DimensionMismatchError("--n does not match the dims product");
  const lapsep::Graph g = load_graph(opt.in_path, dims.product());
  if (g.size() != dims.product())
    throw lapsep::DimensionMismatchError("graph order does not match the dims product");

  lapsep::Verdict verdict_result = [&] {
    if (opt.labeling_path.empty()) return lapsep::verdict(g, dims);
    std::ifstream in(opt.labeling_path);
    if (!in) throw lapsep::Error("cannot open " + opt.labeling_path);
    nlohmann::json j;
    in >> j;
    const auto [file_dims, lab] = lapsep::labeling_from_json(j);
    if (!(file_dims == dims))
      throw lapsep::DimensionMismatchError("labeling dims do not match --dims");
    return lapsep::verdict(g, dims, lab);
  }();

  std::cout << lapsep::verdict_to_json(verdict_result).dump(2) << '\n';
  return status_exit_code(verdict_result.status);
}

int run_search(const Options& opt) {
  const lapsep::DimVector dims = parse_dims(opt.dims_text);
  const lapsep::Graph g = load_graph(opt.in_path, dims.product());
  if (g.size() != dims.product())
    throw lapsep::DimensionMismatchError("graph order does not match the dims product");

  nlohmann::json out;
  out["dims"] = dims.dims();
  if (opt.mode == "all") {
    const lapsep::LabelingCensus census =
        lapsep::all_labelings_verdict(g, dims, lapsep::DeciderMode::Full, opt.jobs);
    out.update(lapsep::census_to_json(census));
    if (census.first_entangling)
      out["entangling_labeling"] = census.first_entangling->map();
  } else {
    const auto outcomes = lapsep::noncomplete_experiment({g}, dims, 1, &std::cerr);
    out["classification"] = outcomes[0].classification;
    if (!outcomes[0].method.empty()) out["method"] = outcomes[0].method;
    if (outcomes[0].labeling)
      out["entangling_labeling"] = outcomes[0].labeling->map();
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_product(const Options& opt) {
  if (opt.factor_paths.size() < 2)
    throw lapsep::Error("product needs at least two graph files");
  const lapsep::ProductMask mask = lapsep::ProductMask::parse(opt.mask_text);
  std::vector<lapsep::Graph> factors;
  for (const auto& path : opt.factor_paths) factors.push_back(load_graph(path, -1));
  const lapsep::Graph prod = lapsep::product_chain(mask, factors);

  if (!opt.certify) {
    lapsep::write_edge_list(std::cout, prod);
    return 0;
  }
  const lapsep::SeparableCertificate cert =
      lapsep::product_laplacian_certificate(mask, factors);
  nlohmann::json out;
  out["mask"] = mask.to_string();
  out["n"] = prod.size();
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 0; i < prod.size(); ++i)
    for (int j = i + 1; j < prod.size(); ++j)
      if (prod.adjacent(i, j)) edges.push_back({i, j});
  out["edges"] = std::move(edges);
  out["certificate"] = lapsep::certificate_to_json(cert);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_census(const Options& opt) {
  if (opt.experiment == "n4") {
    const lapsep::N4Census census = lapsep::census_n4();
    const lapsep::DimVector dims{2, 2};
    for (const auto& entry : census.classes) {
      nlohmann::json j;
      j["graph6"] = entry.graph6;
      j["n"] = 4;
      j["dims"] = dims.dims();
      if (entry.trivial) {
        j["classification"] = "trivial_excluded";
      } else {
        j.update(lapsep::census_to_json(entry.census));
      }
      std::cout << j.dump() << '\n';
    }
    std::cerr << census.all_separable.size()
              << " nontrivial classes separable under every labeling\n";
    return 0;
  }

  if (opt.experiment == "bipartite") {
    if (opt.bipartite_n < 2) throw lapsep::Error("--n is required for bipartite");
    const lapsep::DimVector dims = parse_dims(opt.dims_text);
    if (dims.product() != opt.bipartite_n)
      throw lapsep::DimensionMismatchError("--n does not match the dims product");
    for (int r = 1; r <= opt.bipartite_n / 2; ++r) {
      const lapsep::Graph g = lapsep::complete_bipartite_graph(r, opt.bipartite_n - r);
      const lapsep::LabelingCensus census =
          lapsep::all_labelings_verdict(g, dims, lapsep::DeciderMode::Full, opt.jobs);
      nlohmann::json j;
      j["graph6"] = lapsep::graph6_encode(g);
      j["r"] = r;
      j["n"] = opt.bipartite_n;
      j["dims"] = dims.dims();
      j.update(lapsep::census_to_json(census));
      std::cout << j.dump() << '\n';
    }
    return 0;
  }

  if (opt.experiment == "regular9") {
    const lapsep::DimVector dims =
        opt.dims_text.empty() ? lapsep::DimVector{3, 3} : parse_dims(opt.dims_text);
    std::ifstream in(opt.in_path);
    if (!in) throw lapsep::Error("cannot open " + opt.in_path);
    const std::vector<lapsep::Graph> graphs = lapsep::read_graph6_stream(in);
    std::cerr << "analyzing " << graphs.size() << " graphs\n";
    const auto outcomes =
        lapsep::noncomplete_experiment(graphs, dims, opt.jobs, &std::cerr);
    int failures = 0;
    for (const auto& outcome : outcomes) {
      std::cout << lapsep::outcome_to_json(outcome, dims).dump() << '\n';
      if (outcome.classification == "none_found") ++failures;
    }
    std::cerr << failures << " graphs without an entangling labeling\n";
    return failures == 0 ? 0 : kExitOther;
  }

  throw lapsep::UnknownNameError("unknown experiment: " + opt.experiment);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability analysis of normalized graph Laplacians"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--seed", opt.seed,
                 "Seed for randomized self-checks; analyses are deterministic");

  auto* analyze = app.add_subcommand("analyze", "Verdict for one graph and labeling");
  analyze->add_option("--in", opt.in_path, "Graph file (.g6 or edge list)")->required();
  analyze->add_option("--dims", opt.dims_text, "Factor dimensions, e.g. 2,3")->required();
  analyze->add_option("--labeling", opt.labeling_path, "Labeling JSON file");
  analyze->add_option("--n", opt.n_override, "Expected vertex count");

  auto* search = app.add_subcommand("search", "Find entangling labelings");
  search->add_option("--in", opt.in_path, "Graph file")->required();
  search->add_option("--dims", opt.dims_text, "Factor dimensions")->required();
  search->add_option("--mode", opt.mode, "any | all")
      ->check(CLI::IsMember({"any", "all"}));
  search->add_option("--jobs", opt.jobs, "Worker count");

  auto* product = app.add_subcommand("product", "Build a graph product");
  product->add_option("--mask", opt.mask_text, "Name, condition list, or 0..255");
  product->add_option("files", opt.factor_paths, "Factor graph files")->required();
  product->add_flag("--certify", opt.certify, "Emit a separable certificate");

  auto* census = app.add_subcommand("census", "Batch experiments");
  census->add_option("--experiment", opt.experiment, "n4 | bipartite | regular9")
      ->required()
      ->check(CLI::IsMember({"n4", "bipartite", "regular9"}));
  census->add_option("--n", opt.bipartite_n, "Vertex count (bipartite)");
  census->add_option("--dims", opt.dims_text, "Factor dimensions");
  census->add_option("--in", opt.in_path, "graph6 catalog (regular9)");
  census->add_option("--jobs", opt.jobs, "Worker count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (analyze->parsed()) return run_analyze(opt);
    if (search->parsed()) return run_search(opt);
    if (product->parsed()) return run_product(opt);
    if (census->parsed()) return run_census(opt);
    return kExitParse;
  } catch (const lapsep::DimensionMismatchError& e) {
    std::cerr << "dimension mismatch: " << e.what() << '\n';
    return kExitDims;
  } catch (const lapsep::BadGraph6Error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const lapsep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const std::string what = e.what();
    if (what.find("parse error") != std::string::npos) return kExitParse;
    return kExitOther;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
}
