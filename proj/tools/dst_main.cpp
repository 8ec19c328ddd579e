// Command-line front end: combination, transforms, (de)composition, arrow
// decisions, and the verification suites, over the .bba/.wgt text formats.
//
// Exit codes: 0 success (including an arrow answer of "none"), 1 usage
// error, 2 parse/validation error, 3 mathematical refusal (total conflict,
// non-separable input, oversized frame).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dst/category.hpp"
#include "dst/combination.hpp"
#include "dst/errors.hpp"
#include "dst/io.hpp"
#include "dst/separable.hpp"
#include "dst/verify.hpp"

namespace {

using namespace dst;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_result(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + out_path + "'");
  out << text;
}

// cautious/bold accept either format; .bba inputs are decomposed first and
// refused when that is impossible.
WeightVector load_weights_or_decompose(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".wgt") return load_wgt(path);
  if (ext != ".bba") {
    throw ParseError("'" + path.string() + "': expected a .bba or .wgt file");
  }
  Decomposition d = decompose(load_bba(path));
  switch (d.status) {
    case DecomposeStatus::decomposed:
      return *std::move(d.weights);
    case DecomposeStatus::not_decomposable:
      throw RefusalError("'" + path.string() + "' is not decomposable: " + d.detail);
    case DecomposeStatus::not_separable:
      throw RefusalError("'" + path.string() + "' is not separable: " + d.detail);
  }
  throw Error("unreachable");
}

Subset subset_of_categorical(const MassDistribution& m, const std::string& which) {
  const auto focal = m.focal_elements();
  if (focal.size() != 1) {
    throw ValidationError(which + ": a Boolean object is a categorical mass with one focal set");
  }
  return {m.frame(), focal.front()};
}

ProbabilityDistribution probability_of_mass(const MassDistribution& m, const std::string& which) {
  std::vector<Rational> atoms(m.frame().size());
  for (Mask s : m.focal_elements()) {
    if (std::popcount(s) != 1) {
      throw ValidationError(which + ": a Bayesian object has only singleton focal sets, found " +
                            m.frame().subset_text(s));
    }
    atoms[std::countr_zero(s)] = m.at(s);
  }
  return {m.frame(), std::move(atoms)};
}

int run_combine(const std::string& rule, const std::string& a_path, const std::string& b_path,
                const std::string& out_path, bool with_expand) {
  if (rule == "dempster" || rule == "normalized") {
    if (with_expand) throw UsageError("--expand applies to the cautious and bold rules only");
    const MassDistribution a = load_bba(a_path);
    const MassDistribution b = load_bba(b_path);
    if (rule == "dempster") {
      write_result(emit_bba(combine_unnormalized(a, b)), out_path);
    } else {
      auto [mass, report] = combine_normalized(a, b);
      std::cerr << "conflict = " << report.conflict.str() << "\n";
      write_result(emit_bba(mass), out_path);
    }
    return 0;
  }
  if (rule != "cautious" && rule != "bold") {
    throw UsageError("unknown rule '" + rule + "'");
  }
  const WeightVector a = load_weights_or_decompose(a_path);
  const WeightVector b = load_weights_or_decompose(b_path);
  const WeightVector result =
      rule == "cautious" ? conjoin_weights(a, b) : disjoin_weights(a, b);
  std::string text = emit_wgt(result);
  if (with_expand) text += "\n" + emit_bba(expand(result));
  write_result(text, out_path);
  return 0;
}

int run_transform(const std::string& to, const std::string& path) {
  SetFunctionKind kind;
  if (to == "bel") {
    kind = SetFunctionKind::belief;
  } else if (to == "pl") {
    kind = SetFunctionKind::plausibility;
  } else if (to == "q") {
    kind = SetFunctionKind::commonality;
  } else {
    throw UsageError("unknown transform '" + to + "' (want bel, pl or q)");
  }
  const SetFunction f = transform(load_bba(path), kind);
  std::string out;
  for (Mask s = 0; s < f.values().size(); ++s) {
    out += std::string(kind_name(kind)) + " " + f.frame().subset_text(s) + " = " +
           f.values()[s].str() + "\n";
  }
  std::cout << out;
  return 0;
}

int run_decompose(const std::string& path, const std::string& out_path) {
  Decomposition d = decompose(load_bba(path));
  switch (d.status) {
    case DecomposeStatus::decomposed:
      write_result(emit_wgt(*d.weights), out_path);
      return 0;
    case DecomposeStatus::not_decomposable:
      throw RefusalError("not decomposable: " + d.detail);
    case DecomposeStatus::not_separable:
      throw RefusalError("not separable: " + d.detail);
  }
  throw Error("unreachable");
}

int run_expand(const std::string& path, const std::string& out_path) {
  write_result(emit_bba(expand(load_wgt(path))), out_path);
  return 0;
}

int run_arrow(const std::string& category, bool normalized, const std::string& from_path,
              const std::string& to_path) {
  if (normalized && category != "dempster") {
    throw UsageError("--normalized applies to the dempster category only");
  }
  const MassDistribution from = load_bba(from_path);
  const MassDistribution to = load_bba(to_path);
  if (category == "dempster") {
    const auto arrow = arrow_exists_dempster(from, to, normalized);
    if (!arrow) {
      std::cout << "none\n";
    } else {
      std::cout << emit_bba(arrow->evidence);
    }
    return 0;
  }
  if (category == "boolean") {
    const auto arrow =
        boolean_hom(subset_of_categorical(from, from_path), subset_of_categorical(to, to_path));
    std::cout << (arrow ? arrow->evidence.text() : "none") << "\n";
    return 0;
  }
  if (category == "bayes") {
    const auto arrow = bayes_arrow_exists(probability_of_mass(from, from_path),
                                          probability_of_mass(to, to_path));
    std::cout << (arrow ? arrow->evidence.text() : "none") << "\n";
    return 0;
  }
  throw UsageError("unknown category '" + category + "'");
}

int run_verify(const std::string& suite, std::size_t frame_size, unsigned grid,
               std::uint64_t seed) {
  std::vector<LawReport> reports;
  if (suite == "laws") {
    const std::size_t arrow_cases = 100;
    const std::size_t extremal_cases = frame_size >= 4 ? 20 : 50;
    for (const auto& batch : {
             dempster_law_suite(frame_size, 200, seed),
             weight_combination_suite(frame_size, 200, seed + 1),
             lattice_law_suite(frame_size, 200, seed + 2),
             decomposition_suite(frame_size, 200, seed + 3),
             arrow_soundness_suite(frame_size, arrow_cases, seed + 4),
             extremal_object_suite(frame_size, extremal_cases, seed + 5),
         }) {
      reports.insert(reports.end(), batch.begin(), batch.end());
    }
  } else if (suite == "universal") {
    reports = universal_grid_suite(grid);
    const auto random_part = universal_random_suite(1000, seed);
    reports.insert(reports.end(), random_part.begin(), random_part.end());
    reports.push_back(combination_not_conjunction_demo());
  } else if (suite == "norms") {
    reports = norm_axiom_suite(grid);
  } else {
    throw UsageError("unknown suite '" + suite + "' (want laws, universal or norms)");
  }
  render(std::cout, reports);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact belief-function calculus: combination rules, canonical "
               "weights, cautious/bold operations, arrow decisions"};
  app.require_subcommand(1);

  std::string rule, a_path, b_path, out_path;
  bool with_expand = false;
  auto* combine = app.add_subcommand("combine", "combine two belief states");
  combine->add_option("--rule", rule, "dempster|normalized|cautious|bold")->required();
  combine->add_option("A", a_path, "first input file")->required();
  combine->add_option("B", b_path, "second input file")->required();
  combine->add_option("-o,--output", out_path, "write the result here instead of stdout");
  combine->add_flag("--expand", with_expand, "also emit the expanded mass (cautious/bold)");

  std::string to, transform_path;
  auto* transform_cmd = app.add_subcommand("transform", "print bel, pl or q of a mass");
  transform_cmd->add_option("--to", to, "bel|pl|q")->required();
  transform_cmd->add_option("FILE", transform_path, ".bba input")->required();

  std::string decompose_path, decompose_out;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "canonical weights of a separable mass (.bba -> .wgt)");
  decompose_cmd->add_option("FILE", decompose_path, ".bba input")->required();
  decompose_cmd->add_option("-o,--output", decompose_out, "output path");

  std::string expand_path, expand_out;
  auto* expand_cmd = app.add_subcommand("expand", "expand weights into a mass (.wgt -> .bba)");
  expand_cmd->add_option("FILE", expand_path, ".wgt input")->required();
  expand_cmd->add_option("-o,--output", expand_out, "output path");

  std::string category = "dempster", from_path, to_path;
  bool normalized = false;
  auto* arrow = app.add_subcommand("arrow", "decide evidence-arrow existence FROM -> TO");
  arrow->add_option("--category", category, "dempster|boolean|bayes (default dempster)");
  arrow->add_flag("--normalized", normalized, "use the normalized Dempster category");
  arrow->add_option("FROM", from_path, "source object (.bba)")->required();
  arrow->add_option("TO", to_path, "target object (.bba)")->required();

  std::string suite;
  std::size_t frame_size = 2;
  unsigned grid = 4;
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "run a law-checking suite and print its report");
  verify->add_option("--suite", suite, "laws|universal|norms")->required();
  verify->add_option("--frame-size", frame_size, "frame size for the laws suite (default 2)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{16}));
  verify->add_option("--grid", grid, "grid denominator for universal/norms (default 4)")
      ->check(CLI::Range(1u, 6u));
  verify->add_option("--seed", seed, "seed for the sampled laws (default 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (combine->parsed()) return run_combine(rule, a_path, b_path, out_path, with_expand);
    if (transform_cmd->parsed()) return run_transform(to, transform_path);
    if (decompose_cmd->parsed()) return run_decompose(decompose_path, decompose_out);
    if (expand_cmd->parsed()) return run_expand(expand_path, expand_out);
    if (arrow->parsed()) return run_arrow(category, normalized, from_path, to_path);
    if (verify->parsed()) return run_verify(suite, frame_size, grid, seed);
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
