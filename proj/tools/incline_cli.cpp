#include <iostream>

#include <CLI11.hpp>

#include "incline/cli.hpp"

int main(int argc, char** argv) {
  using namespace incline::cli;
  CLI::App app{"Complete positivity and triangular factorization over inclines"};
  app.set_help_flag("-h,--help", "Print this help and exit");

  std::string command;
  CommandRequest req;
  std::string method, mode, certificate;
  std::size_t max_width = 0;
  std::uint64_t samples = 0, seed = 0, budget = 0;

  app.add_option("command", command, "axioms | check | decompose | factor | cprank | verify")->required();
  app.add_option("input", req.input_path, "matrix JSON (or algebra JSON for axioms)")->required();
  auto* o_method = app.add_option("--method", method, "decompose: djl | pairwise");
  auto* o_mode = app.add_option("--mode", mode, "factor: ul | lu | auto");
  app.add_flag("--exact", req.exact, "cprank: run the brute-force search");
  auto* o_width = app.add_option("--max-width", max_width, "cprank: widest factor to try");
  auto* o_samples = app.add_option("--samples", samples, "axioms: sampled triples");
  auto* o_seed = app.add_option("--seed", seed, "axioms: generator seed");
  auto* o_budget = app.add_option("--budget", budget, "cprank: search node budget");
  auto* o_cert = app.add_option("--certificate", certificate, "verify: certificate JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "incline: " << e.what() << "\n";
    return kUsage;
  }

  const auto cmd = parse_command(command);
  if (!cmd) {
    std::cerr << "incline: unknown command '" << command << "'\n";
    return kUsage;
  }
  req.command = *cmd;
  if (o_method->count()) req.method = method;
  if (o_mode->count()) req.mode = mode;
  if (o_width->count()) req.max_width = max_width;
  if (o_samples->count()) req.samples = samples;
  if (o_seed->count()) req.seed = seed;
  if (o_budget->count()) req.budget = budget;
  if (o_cert->count()) req.certificate_path = certificate;
  return run(req, std::cout, std::cerr);
}
