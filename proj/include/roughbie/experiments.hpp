#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "roughbie/fields.hpp"
#include "roughbie/navier_green.hpp"
#include "roughbie/surface.hpp"
#include "roughbie/types.hpp"

namespace roughbie {

enum class ExampleId { flat_p, flat_s, periodic, rough, custom };

std::string to_string(ExampleId id);
/// Accepts flat-p, flat-s, periodic, rough, custom.
ExampleId parse_example(const std::string& name);

struct Region {
  double x0 = -2.5;
  double x1 = 2.5;
  double y0 = 0.5;
  double y1 = 1.5;
};

struct RunConfig {
  ExampleId example = ExampleId::flat_p;
  double lambda = 1.0;
  double mu = 1.0;
  double omega = 20.0;
  std::optional<double> eta_re;  ///< kappa_s when unset
  std::optional<double> eta_im;  ///< 0 when unset
  std::optional<double> h;     ///< per-example default when unset
  double cut = 10.0 * kPi;
  std::vector<int> N_list{8, 16, 32};
  int nb = 101;
  Region region;
  std::uint64_t seed = 20240917;
  std::string format = "csv";
  std::string output_path;  ///< empty writes to stdout
  bool timing = false;      ///< add wall-clock seconds per N to the JSON manifest
  unsigned threads = 0;     ///< assembly workers, 0 = hardware count

  // custom example: point source over a named surface
  std::string surface = "flat";
  Vec2 source{0.0, -3.0};
  Vec2 polarization{0.6, 0.8};
};

/// Sets one field from its textual form. Keys match the long CLI flags
/// without dashes (example, N, cut, lambda, mu, omega, eta-re, eta-im, h, nb,
/// seed, region, format, out, timing, threads, surface, source, polarization).
/// "N" takes a comma-separated list; "region" takes x0,x1,y0,y1; "source"
/// and "polarization" take two comma-separated numbers. Throws
/// std::invalid_argument.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Plain key=value lines; '#' starts a comment. Later keys override earlier ones.
std::map<std::string, std::string> read_config_file(const std::string& path);

ElasticMedium medium_for(const RunConfig& config);
/// Surface with the resolved image level: h if given, -1 for the flat
/// examples, otherwise the sampled minimum of f over [-cut-1, cut+1] minus 0.5.
SurfaceProfile surface_for(const RunConfig& config);
IncidentField incident_for(const RunConfig& config);
ReferenceSolution reference_for(const RunConfig& config);

/// Mean of squared absolute deviations. Throws std::invalid_argument on
/// empty or mismatched input.
double error_metric(const std::vector<double>& reference, const std::vector<double>& computed);

/// Uniform points in the rectangle, reproducible for a fixed seed.
std::vector<Vec2> sample_points(const Region& region, int nb, std::uint64_t seed);

inline const std::vector<std::string>& statistic_labels() {
  static const std::vector<std::string> labels{"Re u1", "Im u1", "|u1|", "Re u2", "Im u2", "|u2|"};
  return labels;
}

struct ErrorRow {
  std::string example;
  int N = 0;
  std::string statistic;
  double error = 0.0;
};

struct RunResult {
  std::vector<ErrorRow> rows;
  std::vector<double> runtime_seconds;  ///< one per N
  std::vector<double> residuals;        ///< relative linear-solve residual per N
};

/// Six error rows per N, comparing the computed scattered field with the
/// closed-form reference at sampled points.
RunResult run_example(const RunConfig& config);

std::string format_csv(const std::vector<ErrorRow>& rows);
std::vector<ErrorRow> parse_csv(const std::string& text);
std::string format_json(const RunConfig& config, const RunResult& result);

/// Writes CSV or JSON to config.output_path (stdout when empty). Throws
/// std::runtime_error naming the path on I/O failure.
void emit_results(const RunConfig& config, const RunResult& result);

}  // namespace roughbie
