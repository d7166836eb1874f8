// ghzcka: fidelity, GHZ rate and conference-key rate of GHZ generation
// protocols on NV-center networks.
//
//   ghzcka sweep    --config net.cfg --dmin 0 --dmax 100 --dstep 5 --nodes 4,6,10
//   ghzcka report   --config net.cfg --nodes 4 --d 20
//   ghzcka validate --samples 1000000 --seed 1

#include <iostream>

#include "CLI11.hpp"
#include "ghzcka/commands.h"
#include "ghzcka/errors.h"

int main(int argc, char** argv) {
  using namespace ghz;
  CLI::App app{"GHZ generation protocol evaluator for NV-center networks"};
  app.require_subcommand(1);

  cli::SweepOptions sweep;
  std::string sweep_nodes = "4";
  std::string sweep_protocols;
  std::string sweep_out;
  std::string sweep_thresholds;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV over protocols x N x distance");
  sweep_cmd->add_option("--config", sweep.config_path, "physical config file")->required();
  sweep_cmd->add_option("--thresholds", sweep_thresholds, "optional 'N = p_max' file");
  sweep_cmd->add_option("--dmin", sweep.spec.d_min_km, "minimum distance, km");
  sweep_cmd->add_option("--dmax", sweep.spec.d_max_km, "maximum distance, km");
  sweep_cmd->add_option("--dstep", sweep.spec.d_step_km, "distance step, km");
  sweep_cmd->add_option("--nodes", sweep_nodes, "comma-separated node counts");
  sweep_cmd->add_option("--protocols", sweep_protocols, "comma-separated protocol names");
  sweep_cmd->add_option("--out", sweep_out, "output CSV (default: stdout)");
  sweep_cmd->add_flag("--serial", sweep.serial, "evaluate the grid on one thread");

  cli::ReportOptions report;
  std::string report_protocols;
  std::string report_thresholds;
  auto* report_cmd = app.add_subcommand("report", "table of all protocols at one point");
  report_cmd->add_option("--config", report.config_path, "physical config file")->required();
  report_cmd->add_option("--thresholds", report_thresholds, "optional 'N = p_max' file");
  report_cmd->add_option("--nodes", report.n_nodes, "node count N");
  report_cmd->add_option("--d,--dmin", report.d_km, "inter-node distance, km");
  report_cmd->add_option("--protocols", report_protocols, "comma-separated protocol names");
  report_cmd->add_flag("--dump-lambdas", report.dump_lambdas,
                       "print every dephasing factor as CSV (id,value)");

  cli::ValidateOptions validate;
  auto* validate_cmd = app.add_subcommand("validate", "run the oracle comparisons");
  validate_cmd->add_option("--samples", validate.samples, "Monte-Carlo samples per check");
  validate_cmd->add_option("--seed", validate.seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    if (*sweep_cmd) {
      sweep.spec.n_nodes = cli::parse_node_list(sweep_nodes);
      if (!sweep_protocols.empty()) sweep.spec.protocols = cli::parse_protocol_list(sweep_protocols);
      if (!sweep_out.empty()) sweep.out_path = sweep_out;
      if (!sweep_thresholds.empty()) sweep.thresholds_path = sweep_thresholds;
      return cli::cmd_sweep(sweep, std::cout, std::cerr);
    }
    if (*report_cmd) {
      if (!report_protocols.empty()) report.protocols = cli::parse_protocol_list(report_protocols);
      if (!report_thresholds.empty()) report.thresholds_path = report_thresholds;
      return cli::cmd_report(report, std::cout, std::cerr);
    }
    return cli::cmd_validate(validate, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
}
