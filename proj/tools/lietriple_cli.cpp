// Command line front end: verify, double, triple and theorems over algebra
// files or catalog entries.  Exit code 0 on pass, 1 on verification failure,
// 2 on input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lietriple/errors.hpp"
#include "lietriple/pipelines.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

lietriple::AlgebraInput load_input(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) {
    const auto* entry = lietriple::catalog_find(source.substr(8));
    if (!entry) throw lietriple::ParseError("unknown catalog entry '" + source + "'");
    return lietriple::input_from_catalog(*entry);
  }
  std::ifstream in(source);
  if (!in) throw lietriple::ParseError("cannot open '" + source + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return lietriple::input_from_text(source, text.str());
}

void write_report(const lietriple::Report& report, const std::string& path, bool machine,
                  bool to_stderr) {
  std::string body = machine ? report.machine() : report.human();
  if (!path.empty()) {
    std::ofstream out(path);
    if (!out) throw lietriple::ParseError("cannot write report to '" + path + "'");
    out << body;
  } else if (to_stderr) {
    std::cerr << body;
  } else {
    std::cout << body;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for quasitriangular Lie bialgebras,\n"
               "their doubles and triples"};
  app.require_subcommand(1);

  std::string input_source;
  std::string report_path;
  bool machine = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input_source,
                    "algebra file path or catalog:NAME (abelian2, axb, sl2, sl3, su2)")
        ->required();
    cmd->add_option("--report", report_path, "write the report to this path");
    cmd->add_flag("--machine", machine, "stable line-oriented report format");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the full axiom suite");
  CLI::App* dbl = app.add_subcommand("double", "construct and verify the Drinfel'd double");
  CLI::App* trp = app.add_subcommand("triple", "construct and verify the triple");
  CLI::App* thm = app.add_subcommand("theorems", "run every applicable theorem pipeline");
  for (CLI::App* cmd : {verify, dbl, trp, thm}) add_common(cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    lietriple::AlgebraInput input = load_input(input_source);
    if (verify->parsed()) {
      lietriple::Report rep = lietriple::run_verify(input);
      write_report(rep, report_path, machine, false);
      return rep.pass() ? kExitPass : kExitVerificationFailure;
    }
    if (thm->parsed()) {
      lietriple::Report rep = lietriple::run_theorems(input);
      write_report(rep, report_path, machine, false);
      return rep.pass() ? kExitPass : kExitVerificationFailure;
    }
    lietriple::ConstructionOutput out =
        dbl->parsed() ? lietriple::run_double(input) : lietriple::run_triple(input);
    std::cout << out.algebra_file;
    write_report(out.report, report_path, machine, true);
    return out.report.pass() ? kExitPass : kExitVerificationFailure;
  } catch (const lietriple::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const lietriple::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const lietriple::EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}
