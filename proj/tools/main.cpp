#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sysnet/dsl.hpp"
#include "sysnet/errors.hpp"
#include "sysnet/eval.hpp"
#include "sysnet/precond.hpp"
#include "sysnet/realizer.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sysnet::InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

sysnet::SystemNetwork load_network(const std::string& path) {
  sysnet::ParseResult result = sysnet::parse_network(read_file(path));
  if (!result.ok()) {
    std::string message = path + " is not a valid network:";
    for (const auto& error : result.errors)
      message += "\n  " + to_string(error);
    throw sysnet::InputError(message);
  }
  return *std::move(result.network);
}

int run_generate(const std::string& doc_path, const std::string& lexicon_path,
                 const std::string& grammar_path, bool numbered) {
  sysnet::SystemNetwork net = load_network(grammar_path);
  sysnet::Lexicon lexicon = sysnet::parse_lexicon(read_file(lexicon_path));
  sysnet::DocumentPlan plan =
      sysnet::plan_document(sysnet::parse_semantic(read_file(doc_path)),
                            lexicon, net);
  std::vector<sysnet::RealizedText> steps =
      sysnet::realize_document(plan, lexicon);
  std::cout << (numbered ? sysnet::number_steps(steps)
                         : sysnet::joined_document(steps))
            << "\n";
  return 0;
}

int run_validate(const std::string& grammar_path) {
  sysnet::ParseResult result =
      sysnet::parse_network(read_file(grammar_path));
  if (!result.ok()) {
    for (const auto& error : result.errors)
      std::cerr << grammar_path << ":" << to_string(error) << "\n";
    return 2;
  }
  sysnet::ValidationReport report = sysnet::validate_network(*result.network);
  for (const auto& warning : report.warnings())
    std::cout << "warning: " << warning.unit << ": " << warning.message
              << "\n";
  std::cout << "ok: " << result.network->units.size() << " units, "
            << result.network->inputs.size() << " inputs\n";
  return 0;
}

int run_explain(const std::string& doc_path, const std::string& lexicon_path,
                const std::string& grammar_path) {
  sysnet::SystemNetwork net = load_network(grammar_path);
  sysnet::Lexicon lexicon = sysnet::parse_lexicon(read_file(lexicon_path));
  sysnet::DocumentPlan plan =
      sysnet::plan_document(sysnet::parse_semantic(read_file(doc_path)),
                            lexicon, net);
  for (size_t i = 0; i < plan.groups.size(); ++i) {
    const auto& group = plan.groups[i];
    std::cout << "step " << (i + 1) << ": " << group.nucleus_id << "\n";
    for (size_t p = 0; p < group.precond_ids.size(); ++p) {
      std::cout << "  precondition " << group.precond_ids[p] << ":\n";
      std::istringstream lines(sysnet::explain(group.traces[p]));
      std::string line;
      while (std::getline(lines, line)) std::cout << "    " << line << "\n";
    }
    std::cout << "  text: " << sysnet::realize_text(group.structure, lexicon).joined
              << "\n";
  }
  return 0;
}

int run_eval(const std::string& fixtures_dir, const std::string& report_path) {
  sysnet::Evaluation evaluation =
      sysnet::evaluate(sysnet::load_fixture_dir(fixtures_dir));
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw sysnet::InputError("cannot write '" + report_path + "'");
    out << sysnet::machine_report(evaluation);
  }
  std::cout << sysnet::human_report(evaluation);
  return evaluation.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rule-driven realization of precondition expressions"};
  app.require_subcommand(1);

  std::string doc_path, lexicon_path, grammar_path, fixtures_dir, report_path;
  bool numbered = false;

  CLI::App* generate = app.add_subcommand(
      "generate", "realize a semantic document as instructional text");
  generate->add_option("document", doc_path, "semantic document")->required();
  generate->add_option("--lexicon", lexicon_path, "action lexicon")
      ->required();
  generate->add_option("--grammar", grammar_path, "network file")->required();
  generate->add_flag("--numbered", numbered, "number the steps");

  CLI::App* validate =
      app.add_subcommand("validate", "check a network file");
  validate->add_option("grammar", grammar_path, "network file")->required();

  CLI::App* explain = app.add_subcommand(
      "explain", "show which systems fired for every precondition");
  explain->add_option("document", doc_path, "semantic document")->required();
  explain->add_option("--lexicon", lexicon_path, "action lexicon")
      ->required();
  explain->add_option("--grammar", grammar_path, "network file")->required();

  CLI::App* eval = app.add_subcommand(
      "eval", "run decision fixtures against the shipped network");
  eval->add_option("fixtures", fixtures_dir, "directory of *.fix files")
      ->required();
  eval->add_option("--report", report_path, "write a machine report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 64;
  }

  try {
    if (generate->parsed())
      return run_generate(doc_path, lexicon_path, grammar_path, numbered);
    if (validate->parsed()) return run_validate(grammar_path);
    if (explain->parsed())
      return run_explain(doc_path, lexicon_path, grammar_path);
    if (eval->parsed()) return run_eval(fixtures_dir, report_path);
  } catch (const sysnet::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 0;
}
