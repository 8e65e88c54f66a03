#include <iostream>

#include "CLI11.hpp"
#include "ncgeom/cli.hpp"

int main(int argc, char** argv) {
  using namespace ncgeom::cli;
  JobSpec spec;
  std::string cayley;
  std::string output;

  CLI::App app{"Exact noncommutative Riemannian geometry of a finite group"};
  auto* group_opt = app.add_option("--group", spec.group, "Builtin group, dihedral:N")->capture_default_str();
  app.add_option("--cayley", cayley, "Cayley-table JSON file")->excludes(group_opt);
  app.add_option("--class", spec.class_label, "Representative of the conjugacy class")->capture_default_str();
  app.add_option("--mu", spec.mu, "Metric parameter p/q")->capture_default_str();
  std::vector<std::string> commands(std::begin(kCommands), std::end(kCommands));
  app.add_option("--cmd", spec.command, "Computation")->check(CLI::IsMember(commands))->capture_default_str();
  app.add_option("--out", output, "Report file (default: standard output)");
  app.add_flag("--pretty", spec.pretty, "Indent the JSON report");
  app.add_option("--poly", spec.poly, "Spectral-action test polynomial, constant term first")->capture_default_str();
  app.add_option("--lambda", spec.cutoff, "Spectral-action cutoff")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (!cayley.empty()) spec.cayley = cayley;
  if (!output.empty()) spec.output = output;

  const RunResult res = run(spec);
  if (res.exit_code != kOk) {
    std::cerr << res.message << "\n";
    return res.exit_code;
  }
  if (!spec.output) std::cout << res.report;
  return kOk;
}
