#include "roughbie/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "roughbie/kernel_split.hpp"
#include "roughbie/nystrom_solver.hpp"
#include "roughbie/quadrature.hpp"

namespace roughbie {

std::string to_string(ExampleId id) {
  switch (id) {
    case ExampleId::flat_p: return "flat-p";
    case ExampleId::flat_s: return "flat-s";
    case ExampleId::periodic: return "periodic";
    case ExampleId::rough: return "rough";
    case ExampleId::custom: return "custom";
  }
  return "unknown";
}

ExampleId parse_example(const std::string& name) {
  if (name == "flat-p") return ExampleId::flat_p;
  if (name == "flat-s") return ExampleId::flat_s;
  if (name == "periodic") return ExampleId::periodic;
  if (name == "rough") return ExampleId::rough;
  if (name == "custom") return ExampleId::custom;
  throw std::invalid_argument("unknown example '" + name +
                              "' (expected flat-p, flat-s, periodic, rough or custom)");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (t.empty() || pos != t.size() || !std::isfinite(v)) {
    throw std::invalid_argument("invalid number '" + text + "' for " + key);
  }
  return v;
}

long long to_integer(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (t.empty() || pos != t.size()) throw std::invalid_argument("invalid integer '" + text + "' for " + key);
  return v;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(trim(item));
  return parts;
}

std::vector<double> number_list(const std::string& key, const std::string& text, std::size_t count) {
  const auto parts = split_commas(text);
  if (parts.size() != count) {
    throw std::invalid_argument(key + " expects " + std::to_string(count) + " comma-separated numbers");
  }
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(to_double(key, p));
  return out;
}

bool to_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
  if (t == "0" || t == "false" || t == "no" || t == "off") return false;
  throw std::invalid_argument("invalid boolean '" + text + "' for " + key);
}

bool is_flat(const RunConfig& c) {
  return c.example == ExampleId::flat_p || c.example == ExampleId::flat_s ||
         (c.example == ExampleId::custom && c.surface == "flat");
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& raw_key, const std::string& value) {
  const std::string key = trim(raw_key);
  if (key == "example") {
    c.example = parse_example(trim(value));
  } else if (key == "N") {
    c.N_list.clear();
    for (const auto& p : split_commas(value)) {
      const long long n = to_integer(key, p);
      if (n < 1 || n > 100000) throw std::invalid_argument("N must be a positive integer");
      c.N_list.push_back(static_cast<int>(n));
    }
    if (c.N_list.empty()) throw std::invalid_argument("N list is empty");
  } else if (key == "cut") {
    c.cut = to_double(key, value);
  } else if (key == "lambda") {
    c.lambda = to_double(key, value);
  } else if (key == "mu") {
    c.mu = to_double(key, value);
  } else if (key == "omega") {
    c.omega = to_double(key, value);
  } else if (key == "eta-re") {
    c.eta_re = to_double(key, value);
  } else if (key == "eta-im") {
    c.eta_im = to_double(key, value);
  } else if (key == "h") {
    c.h = to_double(key, value);
  } else if (key == "nb") {
    const long long n = to_integer(key, value);
    if (n < 1 || n > 100000000) throw std::invalid_argument("nb must be a positive integer");
    c.nb = static_cast<int>(n);
  } else if (key == "seed") {
    const long long s = to_integer(key, value);
    if (s < 0) throw std::invalid_argument("seed must be nonnegative");
    c.seed = static_cast<std::uint64_t>(s);
  } else if (key == "region") {
    const auto v = number_list(key, value, 4);
    if (!(v[0] < v[1] && v[2] < v[3])) throw std::invalid_argument("region needs x0 < x1 and y0 < y1");
    c.region = {v[0], v[1], v[2], v[3]};
  } else if (key == "format") {
    const std::string f = trim(value);
    if (f != "csv" && f != "json") throw std::invalid_argument("format must be csv or json");
    c.format = f;
  } else if (key == "out") {
    c.output_path = trim(value);
  } else if (key == "timing") {
    c.timing = to_bool(key, value);
  } else if (key == "threads") {
    const long long n = to_integer(key, value);
    if (n < 0 || n > 4096) throw std::invalid_argument("threads must be in 0..4096");
    c.threads = static_cast<unsigned>(n);
  } else if (key == "surface") {
    const std::string name = trim(value);
    surfaces::by_name(name, -1.0);
    c.surface = name;
  } else if (key == "source") {
    const auto v = number_list(key, value, 2);
    c.source = {v[0], v[1]};
  } else if (key == "polarization") {
    const auto v = number_list(key, value, 2);
    c.polarization = {v[0], v[1]};
  } else {
    throw std::invalid_argument("unknown setting '" + key + "'");
  }
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(number) + ": expected key=value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

ElasticMedium medium_for(const RunConfig& c) {
  const double ks = c.omega / std::sqrt(c.mu);
  return ElasticMedium::make(c.lambda, c.mu, c.omega,
                             Complex{c.eta_re.value_or(ks), c.eta_im.value_or(0.0)});
}

SurfaceProfile surface_for(const RunConfig& c) {
  std::string name;
  switch (c.example) {
    case ExampleId::flat_p:
    case ExampleId::flat_s: name = "flat"; break;
    case ExampleId::periodic: name = "periodic"; break;
    case ExampleId::rough: name = "rough"; break;
    case ExampleId::custom: name = c.surface; break;
  }
  SurfaceProfile s = surfaces::by_name(name, -1.0);
  if (c.h) return s.with_image_level(*c.h);
  if (is_flat(c)) return s;
  return s.with_image_level(s.sampled_min(-c.cut - 1.0, c.cut + 1.0, 1e-3) - 0.5);
}

IncidentField incident_for(const RunConfig& c) {
  switch (c.example) {
    case ExampleId::flat_p: return PlaneP{};
    case ExampleId::flat_s: return PlaneS{};
    case ExampleId::periodic:
    case ExampleId::rough: return PointSource{};
    case ExampleId::custom: return PointSource{c.source, c.polarization};
  }
  return PlaneP{};
}

ReferenceSolution reference_for(const RunConfig& c) {
  switch (c.example) {
    case ExampleId::flat_p: return ReferenceSolution::flat_plane_p;
    case ExampleId::flat_s: return ReferenceSolution::flat_plane_s;
    default: return ReferenceSolution::point_source;
  }
}

double error_metric(const std::vector<double>& reference, const std::vector<double>& computed) {
  if (reference.empty()) throw std::invalid_argument("error metric needs at least one point");
  if (reference.size() != computed.size()) throw std::invalid_argument("error metric length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double d = reference[i] - computed[i];
    sum += d * d;
  }
  return sum / static_cast<double>(reference.size());
}

std::vector<Vec2> sample_points(const Region& region, int nb, std::uint64_t seed) {
  if (nb < 1) throw std::invalid_argument("nb must be at least 1");
  if (!(region.x0 < region.x1 && region.y0 < region.y1)) {
    throw std::invalid_argument("region needs x0 < x1 and y0 < y1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(region.x0, region.x1);
  std::uniform_real_distribution<double> uy(region.y0, region.y1);
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(nb));
  for (int i = 0; i < nb; ++i) {
    const double x = ux(rng);
    const double y = uy(rng);
    pts.emplace_back(x, y);
  }
  return pts;
}

RunResult run_example(const RunConfig& config) {
  const ElasticMedium medium = medium_for(config);
  const SurfaceProfile surface = surface_for(config);
  const IncidentField incident = incident_for(config);
  const ReferenceSolution reference = reference_for(config);

  if (const auto* src = std::get_if<PointSource>(&incident)) {
    if (!(src->z.y() < surface.image_level)) {
      throw std::invalid_argument("point source must lie below the image line (z2 < h)");
    }
  }
  if (!(config.region.y0 > surface.sampled_max(config.region.x0, config.region.x1, 1e-3))) {
    throw std::invalid_argument("evaluation region reaches below the surface");
  }
  const std::vector<Vec2> points = sample_points(config.region, config.nb, config.seed);

  PointSource source;
  if (const auto* src = std::get_if<PointSource>(&incident)) source = *src;
  std::vector<CVec2> exact;
  exact.reserve(points.size());
  for (const Vec2& x : points) exact.push_back(exact_scattered(reference, medium, x, source));

  const BoundaryData data = [&](double s) { return CVec2(-incident_eval(incident, medium, surface.point(s))); };
  const KernelPair kernels = kernel_pair(medium, surface);

  RunResult result;
  for (const int n : config.N_list) {
    const auto start = std::chrono::steady_clock::now();
    const Discretization disc = make_discretization(config.cut, n);
    surface.check_window(disc.knots.front(), disc.knots.back(), disc.step / 4.0);
    Density density;
    SolveReport report;
    {
      const Eigen::MatrixXcd system = assemble(kernels, disc, config.threads);
      density = solve(system, data, disc, &report);
    }
    std::vector<CVec2> computed;
    computed.reserve(points.size());
    for (const Vec2& x : points) computed.push_back(scattered_eval(medium, surface, disc, density, x));

    const auto& labels = statistic_labels();
    for (int comp = 0; comp < 2; ++comp) {
      std::vector<double> ref[3];
      std::vector<double> app[3];
      for (std::size_t i = 0; i < points.size(); ++i) {
        const Complex e = exact[i](comp);
        const Complex a = computed[i](comp);
        ref[0].push_back(e.real());
        app[0].push_back(a.real());
        ref[1].push_back(e.imag());
        app[1].push_back(a.imag());
        ref[2].push_back(std::abs(e));
        app[2].push_back(std::abs(a));
      }
      for (int k = 0; k < 3; ++k) {
        result.rows.push_back(
            {to_string(config.example), n, labels[static_cast<std::size_t>(3 * comp + k)], error_metric(ref[k], app[k])});
      }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    result.runtime_seconds.push_back(elapsed.count());
    result.residuals.push_back(report.residual);
  }
  return result;
}

std::string format_csv(const std::vector<ErrorRow>& rows) {
  std::string out = "example,N,statistic,error\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.9e", r.error);
    out += r.example + "," + std::to_string(r.N) + "," + r.statistic + "," + buf + "\n";
  }
  return out;
}

std::vector<ErrorRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != "example,N,statistic,error") {
    throw std::invalid_argument("missing CSV header");
  }
  std::vector<ErrorRow> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto parts = split_commas(line);
    if (parts.size() != 4) throw std::invalid_argument("malformed CSV row '" + line + "'");
    rows.push_back({parts[0], static_cast<int>(to_integer("N", parts[1])), parts[2], to_double("error", parts[3])});
  }
  return rows;
}

std::string format_json(const RunConfig& c, const RunResult& result) {
  using nlohmann::json;
  const ElasticMedium medium = medium_for(c);
  const SurfaceProfile surface = surface_for(c);
  json config = {
      {"example", to_string(c.example)},
      {"lambda", c.lambda},
      {"mu", c.mu},
      {"omega", c.omega},
      {"eta", {{"re", medium.eta.real()}, {"im", medium.eta.imag()}}},
      {"h", surface.image_level},
      {"cut", c.cut},
      {"N_list", c.N_list},
      {"nb", c.nb},
      {"region", {c.region.x0, c.region.x1, c.region.y0, c.region.y1}},
      {"seed", c.seed},
      {"format", c.format},
      {"output_path", c.output_path},
      {"surface", surface.name},
      {"timing", c.timing},
      {"threads", c.threads},
  };
  if (std::holds_alternative<PointSource>(incident_for(c))) {
    const auto src = std::get<PointSource>(incident_for(c));
    config["source"] = {src.z.x(), src.z.y()};
    config["polarization"] = {src.q.x(), src.q.y()};
  }
  json rows = json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"example", r.example}, {"N", r.N}, {"statistic", r.statistic}, {"error", r.error}});
  }
  json doc = {{"config", config}, {"results", rows}};
  if (c.timing) {
    json times = json::array();
    for (std::size_t i = 0; i < result.runtime_seconds.size() && i < c.N_list.size(); ++i) {
      times.push_back({{"N", c.N_list[i]}, {"seconds", result.runtime_seconds[i]}});
    }
    doc["runtime_seconds"] = times;
  }
  return doc.dump(2) + "\n";
}

void emit_results(const RunConfig& config, const RunResult& result) {
  const std::string text = config.format == "json" ? format_json(config, result) : format_csv(result.rows);
  if (config.output_path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("failed writing results to stdout");
    return;
  }
  std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file '" + config.output_path + "'");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing output file '" + config.output_path + "'");
}

}  // namespace roughbie
