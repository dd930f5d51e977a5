#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace gaussknot;
  CLI::App app{"Simplify knot projections given as Gauss codes"};
  app.require_subcommand(1);

  cli::OutputOptions output;
  SearchBudget budget;
  std::size_t max_nodes = budget.max_nodes;
  double max_seconds = std::chrono::duration<double>(budget.max_time).count();
  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-nodes", max_nodes, "Canonical forms one translation search may visit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-seconds", max_seconds, "Wall-clock limit per knot")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  std::string code_text;
  auto* solve_cmd = app.add_subcommand("solve", "Simplify one Gauss code");
  solve_cmd->add_option("code", code_text, "Comma-separated signed crossing labels (\"\" for the unknot)")
      ->required();
  solve_cmd->add_flag("--trace", output.trace, "Print every move");
  solve_cmd->add_flag("--json", output.json, "Print the full report as JSON");
  add_budget(solve_cmd);

  std::string batch_path;
  auto* batch_cmd = app.add_subcommand("batch", "Simplify every Gauss code in a file, one per line");
  batch_cmd->add_option("file", batch_path, "Corpus file")->required();
  batch_cmd->add_flag("--trace", output.trace, "Include every move");
  batch_cmd->add_flag("--json", output.json, "Print the batch report as JSON");
  add_budget(batch_cmd);

  cli::GenerateOptions gen;
  std::string mix_text = "2,2,1,1";
  std::string output_path;
  auto* gen_cmd = app.add_subcommand("generate", "Write a corpus of tangled unknot projections");
  gen_cmd->add_option("--seed", gen.recipe.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "Number of codes")->capture_default_str();
  gen_cmd->add_option("--crossings", gen.recipe.target_crossings, "Crossings per code (at most 50)")
      ->capture_default_str();
  gen_cmd->add_option("--mix", mix_text, "Weights for inverse RM1, inverse RM2, TM1, TM2")->capture_default_str();
  gen_cmd->add_option("-o,--output", output_path, "Output file (default: standard output)");

  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver with the exhaustive oracle on small codes");
  verify_cmd->add_option("n", verify.max_crossings, "Largest crossing count to enumerate")->capture_default_str();
  verify_cmd->add_flag("--allow-large", verify.allow_large, "Permit more than 4 crossings");
  verify_cmd->add_option("--counterexamples", verify.counterexample_path, "Where disagreements are written")
      ->capture_default_str();
  add_budget(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kSuccess : cli::kUsage;
  }

  budget.max_nodes = max_nodes;
  budget.max_time = std::chrono::milliseconds(static_cast<long long>(max_seconds * 1000.0));
  if (budget.max_time.count() <= 0) budget.max_time = std::chrono::milliseconds(1);

  if (*solve_cmd) return cli::cmd_solve(code_text, output, budget, std::cout, std::cerr);
  if (*batch_cmd) return cli::cmd_batch(batch_path, output, budget, std::cout, std::cerr);
  if (*gen_cmd) {
    try {
      gen.recipe.mix = cli::parse_mix(mix_text);
    } catch (const std::exception& e) {
      std::cerr << "bad --mix: " << e.what() << '\n';
      return cli::kUsage;
    }
    if (!output_path.empty()) gen.output_path = output_path;
    return cli::cmd_generate(gen, std::cout, std::cerr);
  }
  verify.budget = budget;
  return cli::cmd_verify(verify, std::cout, std::cerr);
}
