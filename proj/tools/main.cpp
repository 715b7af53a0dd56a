#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "bozk/error.hpp"
#include "commands.hpp"

using namespace bozk;

int main(int argc, char** argv) {
  CLI::App app{"bozk: pseudospectral BO-ZK simulation and verification lab"};
  std::string config, out;
  std::uint64_t seed = 0;
  bool quiet = false;
  app.add_option("--config", config, "manifest file (key = value)")->check(CLI::ExistingFile);
  app.add_option("--out", out, "output directory (overrides the manifest)");
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites");
  app.add_flag("--quiet", quiet, "no progress output");
  app.require_subcommand(1);
  app.fallthrough();

  using Handler = int (*)(const cli::Context&);
  const std::pair<const char*, Handler> table[] = {
      {"simulate", cli::cmd_simulate}, {"linear", cli::cmd_linear}, {"picard", cli::cmd_picard},
      {"uc", cli::cmd_uc},             {"verify", cli::cmd_verify}, {"diagnose", cli::cmd_diagnose},
  };
  const char* help[] = {"nonlinear run with conservation report",
                        "propagator-only evolution",
                        "fixed-point solve of the regularized integral equation",
                        "unique-continuation indicator, persistence scan, moment drift",
                        "weights audit, Stein oracles, inequality suites, A2 dichotomy",
                        "norms of a stored field"};
  std::vector<CLI::App*> subs;
  for (std::size_t k = 0; k < std::size(table); ++k) subs.push_back(app.add_subcommand(table[k].first, help[k]));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kConfigError;
  }

  try {
    cli::Context ctx;
    if (!config.empty()) ctx.m = manifest_from(read_key_values(config));
    if (*seed_opt) ctx.m.seed = seed;
    if (!out.empty()) ctx.m.out = out;
    validate(ctx.m);
    ctx.out = ctx.m.out;
    ctx.quiet = quiet;
    for (std::size_t k = 0; k < subs.size(); ++k)
      if (subs[k]->parsed()) return table[k].second(ctx);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return cli::kConfigError;
  } catch (const NumericalAbort& e) {
    std::cerr << "numerical abort (" << e.audit_name << "): " << e.what() << '\n';
    return cli::kNumericalAbort;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return cli::kConfigError;
  }
  return cli::kConfigError;
}
