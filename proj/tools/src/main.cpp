#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  finsler::cli::Invocation inv;
  CLI::App app{"Minkowski-space toolkit: Euler identities, orthogonalization and motion algebras"};
  app.add_option("command", inv.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(finsler::cli::command_names()));
  app.add_option("--config", inv.config_path, "JSON space configuration")->required();
  app.add_option("--format", inv.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", inv.seed, "Seed for direction sampling");
  app.add_option("--samples", inv.samples, "Number of sampled directions")->check(CLI::PositiveNumber);
  app.add_option("--tol", inv.tol, "Replace every asserted tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return finsler::cli::run(inv, std::cout, std::cerr);
}
