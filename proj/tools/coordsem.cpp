// Command-line front end. Exit status: 0 success, 1 claim mismatch,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coordsem/corpus.hpp"
#include "coordsem/implicature.hpp"
#include "coordsem/probability.hpp"
#include "coordsem/report.hpp"

namespace {

using coordsem::report::Json;

constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct Options {
  std::string format = "text";
  std::string out_file;
  std::string mode = "gazdar";
  std::string connectives = "classical";
  int denominator = 6;
  std::vector<int> opinionated;
  std::vector<std::string> formulas;
  std::vector<std::string> overrides;
};

void emit(const Json& doc, const Options& opt) {
  namespace r = coordsem::report;
  std::cout << (opt.format == "json" ? r::render_json(doc) : r::render_text(doc));
  if (!opt.out_file.empty()) {
    std::ofstream out(opt.out_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opt.out_file);
    out << r::render_json(doc);
  }
}

coordsem::Corpus corpus_with_overrides(const std::vector<std::string>& overrides) {
  coordsem::Corpus corpus = coordsem::Corpus::standard();
  for (const auto& entry : overrides) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--set", "expected LABEL=FORMULA, got '" + entry + "'");
    }
    const std::string text = entry.substr(eq + 1);
    const coordsem::Formula f =
        corpus.contains(text) ? corpus.lookup(text) : coordsem::parse(text);
    corpus.set(entry.substr(0, eq), f);
  }
  return corpus;
}

std::vector<coordsem::report::NamedFormula> resolve_all(const std::vector<std::string>& texts) {
  std::vector<coordsem::report::NamedFormula> out;
  for (const auto& t : texts) {
    out.push_back(coordsem::report::resolve(coordsem::Corpus::standard(), t));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  namespace r = coordsem::report;
  CLI::App app{"Coordination semantics workbench: boolean, option and implicature analyses"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", opt.out_file, "Also write the JSON document to FILE");
  };
  const std::string formula_help = "Corpus label (e.g. 2b) or formula text";

  auto* laws = app.add_subcommand("laws", "Validity of the six lattice laws");
  laws->add_option("connectives", opt.connectives, "classical (join = or) or xor (join = xor)")
      ->check(CLI::IsMember({"classical", "xor"}));
  add_format(laws);

  auto* denote = app.add_subcommand("denote", "Option set of a formula");
  denote->add_option("formula", opt.formulas, formula_help)->required()->expected(1);
  add_format(denote);

  auto* judge = app.add_subcommand("judge", "Judgment table with pairwise comparisons");
  judge->add_option("formulas", opt.formulas, formula_help)->required();
  add_format(judge);

  auto* equiv = app.add_subcommand("equiv", "Boolean and option equivalence of two formulas");
  equiv->add_option("formulas", opt.formulas, formula_help)->required()->expected(2);
  add_format(equiv);

  auto* implicatures = app.add_subcommand("implicatures", "Implicature projection report");
  implicatures->add_option("formula", opt.formulas, formula_help)->required()->expected(1);
  implicatures->add_option("--mode", opt.mode, "Projection mode")
      ->check(CLI::IsMember({"gazdar", "soames"}));
  implicatures->add_option("--opinionated", opt.opinionated,
                           "Or-node ids (in textual order) whose speaker is opinionated");
  add_format(implicatures);

  auto* prob = app.add_subcommand("prob", "Exhaustive rational-grid searches");
  prob->add_option("--denominator", opt.denominator, "Grid denominator")
      ->check(CLI::Range(1, coordsem::max_grid_denominator));
  add_format(prob);

  auto* reproduce = app.add_subcommand("reproduce", "Check every recorded claim");
  reproduce->add_option("--set", opt.overrides,
                        "Replace a corpus entry, LABEL=FORMULA (FORMULA may be a label)");
  add_format(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (laws->parsed()) {
      emit(r::cmd_laws(opt.connectives == "xor" ? coordsem::laws::exclusive_join
                                                : coordsem::ConnectiveMap{}),
           opt);
    } else if (denote->parsed()) {
      emit(r::cmd_denote(resolve_all(opt.formulas).front()), opt);
    } else if (judge->parsed()) {
      emit(r::cmd_judge(resolve_all(opt.formulas)), opt);
    } else if (equiv->parsed()) {
      auto fs = resolve_all(opt.formulas);
      emit(r::cmd_equiv(fs[0], fs[1]), opt);
    } else if (implicatures->parsed()) {
      const auto mode = opt.mode == "soames" ? coordsem::ProjectionMode::soames_conditional
                                             : coordsem::ProjectionMode::gazdar_default;
      const std::set<int> ids(opt.opinionated.begin(), opt.opinionated.end());
      emit(r::cmd_implicatures(resolve_all(opt.formulas).front(), mode, ids), opt);
    } else if (prob->parsed()) {
      emit(r::cmd_prob(opt.denominator), opt);
    } else if (reproduce->parsed()) {
      const auto records = r::reproduce(corpus_with_overrides(opt.overrides));
      emit(r::reproduce_document(records), opt);
      return r::all_match(records) ? 0 : exit_mismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return 0;
}
