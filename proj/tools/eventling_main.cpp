#include <iostream>

#include <CLI11.hpp>

#include "eventling/commands.hpp"

int main(int argc, char** argv) {
  using namespace eventling::cli;

  CLI::App app{"Vague sets and eventological linguistic variables"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("--config", opts.config, "key = value configuration file");
    cmd->add_option("--lo", opts.lo, "universe lower bound (overrides config)");
    cmd->add_option("--hi", opts.hi, "universe upper bound (overrides config)");
    cmd->add_option("--out", opts.out, "write output to this file instead of stdout");
  };

  auto* validate = app.add_subcommand("validate", "check a judgment dataset and summarize it");
  validate->add_option("--dataset", opts.dataset, "judgment CSV")->required();
  add_common(validate);

  auto* eval = app.add_subcommand("eval", "evaluate an expression over a dataset");
  eval->add_option("--dataset", opts.dataset, "judgment CSV")->required();
  eval->add_option("--expr", opts.expr, "linguistic expression")->required();
  eval->add_option("--semantics", opts.semantics, "event | vague | tnorm:min | tnorm:prod | tnorm:luk");
  eval->add_option("--step", opts.step, "sampling step for CSV output");
  eval->add_option("--format", opts.format, "csv | svg");
  add_common(eval);

  auto* compare = app.add_subcommand("compare", "Minkowski combination vs the three t-norms");
  compare->add_option("--dataset", opts.dataset, "judgment CSV")->required();
  compare->add_option("--expr", opts.expr, "'x and y' or 'x or y'")->required();
  compare->add_option("--step", opts.step, "sampling step for CSV output");
  compare->add_option("--format", opts.format, "csv | svg");
  add_common(compare);

  auto* example = app.add_subcommand("example", "generate the synthetic age experiment dataset");
  example->add_option("--seed", opts.seed, "generator seed");
  example->add_option("--subjects", opts.subjects, "number of subjects");
  example->add_option("--out", opts.out, "write output to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  if (*validate) return run_validate(opts, std::cout, std::cerr);
  if (*eval) return run_eval(opts, std::cout, std::cerr);
  if (*compare) return run_compare(opts, std::cout, std::cerr);
  if (*example) return run_example(opts, std::cout, std::cerr);
  return kUsage;
}
