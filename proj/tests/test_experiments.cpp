#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "roughbie/experiments.hpp"

using namespace roughbie;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "roughbie_test_experiments";
  fs::create_directories(dir);
  return dir / name;
}

RunConfig quick(ExampleId id) {
  RunConfig c;
  c.example = id;
  c.cut = 4.0 * kPi;
  c.N_list = {4};
  c.nb = 7;
  c.threads = 1;
  return c;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ROUGHBIE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

}  // namespace

TEST(ErrorMetricTest, Cases) {
  EXPECT_EQ(error_metric({1.0, -2.0, 3.5}, {1.0, -2.0, 3.5}), 0.0);
  EXPECT_NEAR(error_metric({0.0, 1.0, 2.0}, {0.5, 0.5, 2.5}), 0.25, 1e-16);
  std::vector<double> a(101, 0.0), b(101, 0.0);
  b[17] = 1.0;
  EXPECT_NEAR(error_metric(a, b), 1.0 / 101.0, 1e-17);
  EXPECT_THROW(error_metric({}, {}), std::invalid_argument);
  EXPECT_THROW(error_metric({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST(SamplePointsTest, DeterministicAndInsideRegion) {
  const RunConfig c;
  EXPECT_EQ(c.nb, 101);
  const auto a = sample_points(c.region, c.nb, c.seed);
  const auto b = sample_points(c.region, c.nb, c.seed);
  ASSERT_EQ(a.size(), 101u);
  EXPECT_EQ(a, b);
  for (const auto& p : a) {
    EXPECT_GE(p.x(), -2.5);
    EXPECT_LE(p.x(), 2.5);
    EXPECT_GE(p.y(), 0.5);
    EXPECT_LE(p.y(), 1.5);
  }
  EXPECT_NE(sample_points(c.region, c.nb, c.seed + 1), a);
  for (const auto& s : {surfaces::flat(-1.0), surfaces::periodic(-1.0), surfaces::rough(-1.0)}) {
    const double top = s.sampled_max(-2.5, 2.5, 1e-4);
    for (const auto& p : a) EXPECT_GT(p.y(), top);
  }
  EXPECT_THROW(sample_points(c.region, 0, 1), std::invalid_argument);
}

TEST(RunConfigTest, Defaults) {
  const RunConfig c;
  EXPECT_EQ(c.lambda, 1.0);
  EXPECT_EQ(c.mu, 1.0);
  EXPECT_EQ(c.omega, 20.0);
  EXPECT_NEAR(c.cut, 10.0 * kPi, 1e-15);
  EXPECT_EQ(c.region.x0, -2.5);
  EXPECT_EQ(c.region.x1, 2.5);
  EXPECT_EQ(c.region.y0, 0.5);
  EXPECT_EQ(c.region.y1, 1.5);
  EXPECT_EQ(medium_for(c).eta, Complex(20.0, 0.0));
  EXPECT_EQ(surface_for(c).image_level, -1.0);
}

TEST(RunConfigTest, ImageLevelDefaults) {
  RunConfig c;
  c.example = ExampleId::rough;
  const auto s = surface_for(c);
  EXPECT_LT(s.image_level, s.sampled_min(-c.cut - 1.0, c.cut + 1.0, 1e-3));
  EXPECT_NEAR(s.image_level, s.sampled_min(-c.cut - 1.0, c.cut + 1.0, 1e-3) - 0.5, 1e-15);
  EXPECT_LT(s.sampled_min(-c.cut, c.cut, 1e-3), 0.0);
  c.h = -2.0;
  EXPECT_EQ(surface_for(c).image_level, -2.0);
}

TEST(RunConfigTest, ApplySetting) {
  RunConfig c;
  apply_setting(c, "example", "periodic");
  apply_setting(c, "N", "8, 16,64");
  apply_setting(c, "region", "-1,1,0.5,2");
  apply_setting(c, "eta-im", "0.5");
  apply_setting(c, "timing", "true");
  EXPECT_EQ(c.example, ExampleId::periodic);
  EXPECT_EQ(c.N_list, (std::vector<int>{8, 16, 64}));
  EXPECT_EQ(c.region.y1, 2.0);
  EXPECT_EQ(medium_for(c).eta, Complex(20.0, 0.5));
  EXPECT_TRUE(c.timing);
  EXPECT_THROW(apply_setting(c, "colour", "red"), std::invalid_argument);
  EXPECT_THROW(apply_setting(c, "N", "8,x"), std::invalid_argument);
  EXPECT_THROW(apply_setting(c, "region", "1,0,0,1"), std::invalid_argument);
  EXPECT_THROW(apply_setting(c, "example", "bumpy"), std::invalid_argument);
  EXPECT_THROW(apply_setting(c, "format", "xml"), std::invalid_argument);
  for (auto id : {ExampleId::flat_p, ExampleId::flat_s, ExampleId::periodic, ExampleId::rough,
                  ExampleId::custom}) {
    EXPECT_EQ(parse_example(to_string(id)), id);
  }
}

TEST(RunConfigTest, ConfigFileParsing) {
  const auto p = scratch("settings.cfg");
  std::ofstream(p) << "# comment\nomega = 12\n\nnb=5 # trailing\nomega=15\n";
  const auto kv = read_config_file(p.string());
  EXPECT_EQ(kv.at("omega"), "15");
  EXPECT_EQ(kv.at("nb"), "5");
  std::ofstream(p) << "just words\n";
  EXPECT_THROW(read_config_file(p.string()), std::invalid_argument);
  EXPECT_THROW(read_config_file((p.parent_path() / "missing.cfg").string()), std::runtime_error);
}

TEST(RunExampleTest, RowsAndGuards) {
  const auto r = run_example(quick(ExampleId::flat_p));
  ASSERT_EQ(r.rows.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(r.rows[i].example, "flat-p");
    EXPECT_EQ(r.rows[i].N, 4);
    EXPECT_EQ(r.rows[i].statistic, statistic_labels()[i]);
    EXPECT_GE(r.rows[i].error, 0.0);
  }
  ASSERT_EQ(r.residuals.size(), 1u);
  EXPECT_LE(r.residuals[0], 1e-10);

  auto c = quick(ExampleId::periodic);
  c.h = -3.5;
  EXPECT_THROW(run_example(c), std::invalid_argument);
  c = quick(ExampleId::rough);
  c.region.y0 = 0.0;
  EXPECT_THROW(run_example(c), std::invalid_argument);
}

TEST(RunExampleTest, CustomExample) {
  auto c = quick(ExampleId::custom);
  c.surface = "periodic";
  c.source = Vec2(0.5, -2.0);
  c.polarization = Vec2(1.0, 0.0);
  const auto r = run_example(c);
  EXPECT_EQ(r.rows.size(), 6u);
  EXPECT_EQ(r.rows[0].example, "custom");
}

TEST(OutputTest, CsvRoundTrip) {
  EXPECT_EQ(format_csv({}), "example,N,statistic,error\n");
  EXPECT_TRUE(parse_csv(format_csv({})).empty());
  const std::vector<ErrorRow> rows{{"rough", 8, "Re u1", 1.234567890123e-7},
                                   {"rough", 8, "|u2|", 0.1706786080},
                                   {"flat-s", 128, "Im u2", 0.0}};
  const std::string text = format_csv(rows);
  EXPECT_NE(text.find("1.234567890e-07"), std::string::npos);
  const auto back = parse_csv(text);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].example, rows[i].example);
    EXPECT_EQ(back[i].N, rows[i].N);
    EXPECT_EQ(back[i].statistic, rows[i].statistic);
    char want[32];
    std::snprintf(want, sizeof want, "%.9e", rows[i].error);
    EXPECT_EQ(back[i].error, std::strtod(want, nullptr));
  }
  EXPECT_EQ(format_csv(back), text);
  EXPECT_THROW(parse_csv("a,b\n"), std::invalid_argument);
}

TEST(OutputTest, JsonManifest) {
  RunConfig c = quick(ExampleId::rough);
  const RunResult r = {{{"rough", 4, "Re u1", 1e-3}}, {0.5}, {1e-15}};
  const std::string j = format_json(c, r);
  EXPECT_NE(j.find("\"omega\": 20"), std::string::npos);
  EXPECT_NE(j.find("\"seed\": 20240917"), std::string::npos);
  EXPECT_NE(j.find("\"eta\""), std::string::npos);
  EXPECT_NE(j.find("\"results\""), std::string::npos);
  EXPECT_EQ(j.find("runtime_seconds"), std::string::npos);
  c.timing = true;
  EXPECT_NE(format_json(c, r).find("runtime_seconds"), std::string::npos);
}

TEST(OutputTest, EmitToFileAndErrors) {
  auto c = quick(ExampleId::flat_s);
  c.output_path = scratch("emit.csv").string();
  const RunResult r = {{{"flat-s", 4, "Re u1", 2e-3}}, {0.1}, {1e-15}};
  emit_results(c, r);
  EXPECT_EQ(slurp(c.output_path), format_csv(r.rows));
  c.output_path = "/nonexistent-dir/out.csv";
  try {
    emit_results(c, r);
    FAIL() << "expected an I/O error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.csv"), std::string::npos);
  }
}

TEST(DeterminismTest, RepeatedRunsAreByteIdentical) {
  for (const char* fmt : {"csv", "json"}) {
    auto c = quick(ExampleId::rough);
    c.format = fmt;
    c.output_path = scratch(std::string("repeat.") + fmt).string();
    emit_results(c, run_example(c));
    const std::string first = slurp(c.output_path);
    c.threads = 2;
    emit_results(c, run_example(c));
    const std::string second = slurp(c.output_path);
    if (std::string(fmt) == "json") {
      EXPECT_NE(first, second);  // the manifest records the thread count
    } else {
      EXPECT_EQ(first, second);
    }
    c.threads = 1;
    emit_results(c, run_example(c));
    EXPECT_EQ(slurp(c.output_path), first);
  }
}

TEST(CliTest, PrecedenceAndExitCodes) {
  const auto cfg = scratch("cli.cfg");
  const auto out = scratch("cli.json");
  std::ofstream(cfg) << "example=flat-p\nomega=10\nnb=5\ncut=3.141592653589793\nN=2\nformat=json\n";
  ASSERT_EQ(run_cli("--config " + cfg.string() + " --out " + out.string()), 0);
  EXPECT_NE(slurp(out).find("\"omega\": 10"), std::string::npos);
  ASSERT_EQ(run_cli("--config " + cfg.string() + " --omega 20 --out " + out.string()), 0);
  const std::string text = slurp(out);
  EXPECT_NE(text.find("\"omega\": 20"), std::string::npos);
  EXPECT_NE(text.find("\"nb\": 5"), std::string::npos);
  EXPECT_NE(run_cli("--example nowhere"), 0);
  EXPECT_NE(run_cli("--config " + (cfg.parent_path() / "absent.cfg").string()), 0);
}
