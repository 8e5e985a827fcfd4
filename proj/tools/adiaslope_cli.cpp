#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "adiaslope/errors.hpp"
#include "adiaslope/problem.hpp"

namespace {

struct CommonArgs {
  std::string input_path;
  std::string output_path;
  int max_order = -1;  // -1 keeps the document's setting
  bool crosscheck = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--input", args.input_path, "problem description (JSON)")->required();
  cmd->add_option("--output", args.output_path, "report path (default: standard output)");
  cmd->add_option("--max-order", args.max_order,
                  "truncate reported coefficient lists at order N");
  cmd->add_flag("--crosscheck", args.crosscheck,
                "compare bracket expansions against their closed forms");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw adiaslope::SchemaError("cannot open input file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_report(const nlohmann::json& report, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    throw adiaslope::SchemaError("cannot open output file: " + output_path);
  }
  out << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adiabatic slope stability of projectivized bundles over a surface"};
  app.require_subcommand(1);

  CommonArgs args;
  CLI::App* df = app.add_subcommand("df", "full stability run per subbundle");
  CLI::App* chi = app.add_subcommand("chi", "Euler characteristics of the extension bundles");
  CLI::App* slope = app.add_subcommand("slope", "slopes only");
  CLI::App* crosscheck =
      app.add_subcommand("crosscheck", "bracket expansions against closed forms");
  for (CLI::App* cmd : {df, chi, slope, crosscheck}) {
    add_common(cmd, args);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    adiaslope::ProblemSpec spec = adiaslope::parse_problem_text(read_file(args.input_path));
    if (args.max_order >= 0) {
      spec.options.max_order = args.max_order;
    }
    if (args.crosscheck) {
      spec.options.crosscheck = true;
    }

    nlohmann::json report;
    if (df->parsed()) {
      report = adiaslope::run_df(spec);
    } else if (chi->parsed()) {
      report = adiaslope::run_chi(spec);
    } else if (slope->parsed()) {
      report = adiaslope::run_slope(spec);
    } else {
      report = adiaslope::run_crosscheck(spec);
    }
    write_report(report, args.output_path);

    const bool crosscheck_requested = crosscheck->parsed() || spec.options.crosscheck;
    if (crosscheck_requested && adiaslope::report_has_crosscheck_mismatch(report)) {
      std::cerr << "crosscheck mismatch\n";
      return 2;
    }
    return 0;
  } catch (const adiaslope::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const adiaslope::SemanticError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const adiaslope::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
