// optonet: calculators, figure datasets, and seeded network simulations.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optonet/calc.hpp"
#include "optonet/commands.hpp"
#include "optonet/error.hpp"
#include "optonet/figures.hpp"

int main(int argc, char** argv) {
  using namespace optonet;

  CLI::App app{"Optoelectronic network calculators, figure datasets and simulations"};
  app.require_subcommand(1);

  GlobalOptions opts;
  std::string config, out, profile, format;
  std::uint64_t seed = 0;
  auto* config_opt = app.add_option("--config", config, "Scenario or technology JSON file");
  auto* out_opt = app.add_option("--out", out, "Output directory (default $OPTONET_OUT_DIR or ./out)");
  auto* seed_opt = app.add_option("--seed", seed, "64-bit seed");
  auto* profile_opt = app.add_option("--profile", profile, "Platform profile name");
  auto* format_opt = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--set", opts.set, "Parameter override key=value (repeatable)")->take_all();
  for (auto* o : {config_opt, out_opt, seed_opt, profile_opt, format_opt}) o->configurable(false);

  std::string formula;
  auto* calc_cmd = app.add_subcommand("calc", "Evaluate one formula: calc NAME --param value ...");
  calc_cmd->add_option("formula", formula, "Formula name (calc --list shows all)");
  bool list_formulas = false;
  calc_cmd->add_flag("--list", list_formulas, "List formulas and their parameters");
  calc_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  // Formula parameters are free-form (--name value), so they stay with calc.
  calc_cmd->allow_extras();

  std::string figure_id;
  auto* fig_cmd = app.add_subcommand("figure", "Write the dataset behind a figure");
  fig_cmd->add_option("id", figure_id, "fig3, fig4, fig6, fig7, fig8 or fig9")->required();
  fig_cmd->fallthrough();

  auto* sim_cmd = app.add_subcommand("simulate", "Run a scenario; writes spikes and ledger");
  sim_cmd->fallthrough();

  Eq6Options eq6;
  auto* eq6_cmd = app.add_subcommand("validate-eq6", "Compare BFS path lengths of random graphs with the degree formula");
  eq6_cmd->add_option("--n", eq6.n, "Network sizes")->delimiter(',');
  eq6_cmd->add_option("--k", eq6.k, "Mean degrees")->delimiter(',');
  eq6_cmd->add_option("--seeds", eq6.seeds, "Graphs per (n, k)");
  eq6_cmd->add_option("--tolerance", eq6.tolerance, "Relative tolerance");
  eq6_cmd->fallthrough();

  auto* mem_cmd = app.add_subcommand("membench", "Score memory technologies against plasticity targets");
  mem_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::ok : exit_code::usage_error;
  }

  if (*config_opt) opts.config = config;
  if (*out_opt) opts.out = out;
  if (*seed_opt) opts.seed = seed;
  if (*profile_opt) opts.profile = profile;
  if (!format.empty()) opts.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

  return run_command(
      [&]() -> int {
        if (calc_cmd->parsed()) {
          if (list_formulas) {
            for (const auto& f : calc_formulas()) {
              std::cout << f.name << ": " << f.summary << '\n';
              for (const auto& p : f.params) {
                std::cout << "    --" << p.name << "  " << p.description << (p.required ? "" : " (optional)") << '\n';
              }
            }
            return exit_code::ok;
          }
          if (formula.empty()) throw UsageError("calc needs a formula name (see calc --list)");
          return cmd_calc(formula, calc_cmd->remaining(), opts, std::cout);
        }
        if (fig_cmd->parsed()) return cmd_figure(figure_id, opts, std::cout);
        if (sim_cmd->parsed()) return cmd_simulate(opts, std::cout);
        if (eq6_cmd->parsed()) return cmd_validate_eq6(eq6, opts, std::cout);
        if (mem_cmd->parsed()) return cmd_membench(opts, std::cout);
        throw UsageError("no command given");
      },
      std::cerr);
}
