// Command-line driver: solves the scattering examples and reports E(v) per N.
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roughbie/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Elastic scattering by rough surfaces: Nystrom solver and convergence tables"};
  app.set_help_flag("--help", "print this help and exit");

  std::string config_path;
  std::vector<std::string> n_values;
  bool timing = false;

  app.add_option("--config", config_path, "key=value settings file (CLI flags take precedence)");
  const char* keys[] = {"example", "cut",    "lambda", "mu",    "omega",   "eta-re",  "eta-im",
                        "h",       "nb",     "seed",   "region", "format", "out",     "threads",
                        "surface", "source", "polarization"};
  std::map<std::string, std::string> help{
      {"example", "flat-p, flat-s, periodic, rough or custom"},
      {"cut", "truncation half-width, a multiple of pi/(2N) (default 10 pi)"},
      {"lambda", "Lame constant lambda (default 1)"},
      {"mu", "Lame constant mu (default 1)"},
      {"omega", "angular frequency (default 20)"},
      {"eta-re", "real part of the coupling constant (default kappa_s)"},
      {"eta-im", "imaginary part of the coupling constant (default 0)"},
      {"h", "image line level (default: -1 for flat, min f - 0.5 otherwise)"},
      {"nb", "number of random evaluation points (default 101)"},
      {"seed", "random seed for the evaluation points"},
      {"region", "evaluation rectangle x0,x1,y0,y1 (default -2.5,2.5,0.5,1.5)"},
      {"format", "csv or json"},
      {"out", "output file (default stdout)"},
      {"threads", "assembly threads, 0 = all cores"},
      {"surface", "custom example surface: flat, periodic or rough"},
      {"source", "custom example source point z1,z2"},
      {"polarization", "custom example polarization q1,q2"}};
  std::map<std::string, std::string> values;
  for (const char* k : keys) {
    app.add_option("--" + std::string(k), values[k], help[k])->allow_extra_args(false);
  }
  app.add_option("--N", n_values, "refinement N; repeat or comma-separate (default 8,16,32)")
      ->delimiter(',');
  app.add_flag("--timing", timing, "record wall-clock seconds per N in the JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    roughbie::RunConfig config;
    if (!config_path.empty()) {
      for (const auto& [key, value] : roughbie::read_config_file(config_path)) {
        roughbie::apply_setting(config, key, value);
      }
    }
    for (const char* k : keys) {
      if (app.count("--" + std::string(k)) > 0) roughbie::apply_setting(config, k, values[k]);
    }
    if (!n_values.empty()) {
      std::string joined;
      for (const auto& n : n_values) joined += (joined.empty() ? "" : ",") + n;
      roughbie::apply_setting(config, "N", joined);
    }
    if (timing) config.timing = true;

    const roughbie::RunResult result = roughbie::run_example(config);
    roughbie::emit_results(config, result);
  } catch (const std::exception& e) {
    std::cerr << "roughbie: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
