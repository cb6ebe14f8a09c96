// Copyright 2026 The enwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "csv_format.hpp"
#include "enwit/errors.hpp"
#include "enwit/witness.hpp"
#include "test_util.hpp"

namespace enwit::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Value of a `key=value` output line.
std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with(key + "=")) return line.substr(key.size() + 1);
  }
  return "";
}

class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(fs::temp_directory_path() /
              (name + "_" + std::to_string(::testing::UnitTest::GetInstance()
                                                ->random_seed()) +
               "_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1, 10), "0.1");
  EXPECT_EQ(format_double(-2.0, 10), "-2");
  EXPECT_EQ(format_double(0.0, 10), "0");
  EXPECT_EQ(format_double(-0.0, 10), "0");
  EXPECT_EQ(format_double(1.0 / 3.0, 10), "0.3333333333");
  EXPECT_EQ(format_double(1.0 / 3.0, 17), "0.3333333333333333");
  EXPECT_EQ(std::stod(format_double(std::numbers::pi, 17)), std::numbers::pi);
}

TEST(Grid, InclusiveEndpoints) {
  const std::vector<double> v = GridSpec{0.0, 2.0, 41}.values();
  ASSERT_EQ(v.size(), 41u);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), 2.0);
  EXPECT_NEAR(v[1], 0.05, 1e-15);
  EXPECT_EQ((GridSpec{1.5, 1.5, 1}.values()), (std::vector<double>{1.5}));
  EXPECT_THROW(GridSpec({1.0, 0.0, 3}).validate("T"), InvalidArgument);
  EXPECT_THROW(GridSpec({0.0, 1.0, 0}).validate("T"), InvalidArgument);
}

TEST(Cli, Spectrum) {
  const Result r = run_cli({"spectrum", "--J", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(field(r.out, "e_min"), "-3");
  EXPECT_EQ(field(r.out, "e_max"), "1");
  EXPECT_EQ(field(r.out, "levels"), "2");
  EXPECT_EQ(field(run_cli({"spectrum", "--J", "1", "--B", "0.5"}).out, "levels"),
            "4");
}

TEST(Cli, SpectrumGapWithPolicy) {
  const Result r = run_cli({"spectrum", "--J", "1", "--policy", "fixed:-2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("1"), std::string::npos);
  EXPECT_EQ(run_cli({"spectrum", "--J", "1"}).out.find("gap"), std::string::npos);
  EXPECT_NE(r.out.find("gap"), std::string::npos);
}

TEST(Cli, EsepPolicies) {
  EXPECT_EQ(field(run_cli({"esep", "--J", "1"}).out, "esep"), "-1.0000000000");
  EXPECT_EQ(field(run_cli({"esep", "--J", "1", "--policy", "fixed:-2"}).out, "esep"),
            "-2.0000000000");
  const Result cf = run_cli({"esep", "--J", "1", "--B", "1", "--policy", "closed-form"});
  EXPECT_EQ(field(cf.out, "esep"), "-1.5000000000");
  EXPECT_EQ(field(cf.out, "source"), "closed-form");
}

TEST(Cli, WitnessPresetBound) {
  const Result r =
      run_cli({"witness", "--J", "1", "--T", "1", "--policy", "fixed:-2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(field(r.out, "A"), "3");
  const double bound = std::stod(field(r.out, "bound_raw"));
  EXPECT_NEAR(bound, (-2.0 - testing::xxx_b0_thermal_energy(1.0)) / 3.0, 1e-9);
  EXPECT_EQ(field(r.out, "detected"), "true");
  const Result e = run_cli(
      {"witness", "--J", "1", "--energy", "-2.5", "--policy", "fixed:-2"});
  EXPECT_NEAR(std::stod(field(e.out, "bound_raw")), 1.0 / 6.0, 1e-9);
}

TEST(Cli, PauliFileModel) {
  TempDir dir("enwit_cli_pauli");
  const fs::path file = dir.path() / "h.txt";
  std::ofstream(file) << "# Heisenberg pair\n1 XX\n1 YY\n\n1 ZZ\n";
  const Result r = run_cli(
      {"spectrum", "--model", "pauli-file", "--pauli-file", file.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(field(r.out, "e_min"), "-3");
  EXPECT_EQ(field(r.out, "levels"), "2");
}

TEST(Cli, Robustness) {
  const Result s = run_cli({"robustness", "--state", "singlet"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_NEAR(std::stod(field(s.out, "rg_value")), 1.0, 1e-5);
  EXPECT_EQ(field(s.out, "entangled"), "true");
  const Result t = run_cli({"robustness", "--state", "thermal", "--J", "1", "--T", "5"});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  EXPECT_EQ(field(t.out, "entangled"), "false");
  EXPECT_EQ(field(t.out, "bound_le_rg"), "true");
  const Result p = run_cli({"robustness", "--state", "product:0,1"});
  EXPECT_NEAR(std::stod(field(p.out, "rg_value")), 0.0, 1e-6);
}

TEST(Cli, MeasureIsReproducible) {
  const std::vector<std::string> args = {"measure",  "--J",     "1",
                                         "--T",      "1",       "--state",
                                         "thermal",  "--seed",  "1",
                                         "--policy", "fixed:-2"};
  const Result a = run_cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, run_cli(args).out);
  EXPECT_EQ(field(a.out, "detected"), "true");
  const double lo = std::stod(field(a.out, "bound_lower"));
  const double hi = std::stod(field(a.out, "bound_upper"));
  const double exact = (-2.0 - testing::xxx_b0_thermal_energy(1.0)) / 3.0;
  EXPECT_LE(lo, exact);
  EXPECT_GE(hi, exact);
}

TEST(Cli, ConfigurationErrorsExitTwo) {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"bogus"},
      {"spectrum"},                                     // no --J
      {"spectrum", "--J", "-1"},                        // J <= 0
      {"spectrum", "--J", "1", "--n-sites", "1"},
      {"spectrum", "--J", "1", "--boundary", "twisted"},
      {"esep", "--J", "1", "--policy", "approximate"},
      {"esep", "--J", "1", "--partition", "0,1"},
      {"witness", "--J", "1", "--energy", "5"},          // outside spectrum
      {"witness", "--J", "1", "--T", "-1"},
      {"robustness", "--state", "pure:1,0,0"},
      {"robustness", "--state", "wavy"},
      {"robustness", "--state", "singlet", "--precision", "30"},
      {"measure", "--J", "1", "--state", "singlet", "--shots", "0"},
      {"bound-sweep", "--J", "1", "--T-min", "2", "--T-max", "1"},
      {"spectrum", "--model", "pauli-file"},
      {"spectrum", "--config", "/nonexistent/enwit.cfg"},
  };
  for (const auto& args : bad) {
    const Result r = run_cli(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.code, kExitConfigError) << joined << "\n" << r.out << r.err;
  }
}

TEST(Cli, ConfigFileAndOverrides) {
  TempDir dir("enwit_cli_config");
  const fs::path cfg = dir.path() / "run.cfg";
  std::ofstream(cfg) << "# field run\nJ: 1\nB: 0.5\n\n";
  const Result r = run_cli({"spectrum", "--config", cfg.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(field(r.out, "e_max"), "2");
  // Explicit flags win over the file.
  const Result o = run_cli({"spectrum", "--config", cfg.string(), "--B", "0"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(field(o.out, "e_max"), "1");

  const fs::path bad = dir.path() / "bad.cfg";
  std::ofstream(bad) << "J 1\n";
  EXPECT_EQ(run_cli({"spectrum", "--config", bad.string()}).code,
            kExitConfigError);
}

TEST(Cli, SweepCsvRoundTrip) {
  TempDir dir("enwit_cli_sweep");
  const fs::path csv = dir.path() / "sweep.csv";
  const Result r = run_cli({"bound-sweep", "--J", "1", "--policy", "closed-form",
                            "--B-min", "0", "--B-max", "2", "--B-steps", "5",
                            "--T-min", "0.1", "--T-max", "4", "--T-steps", "9",
                            "--output", csv.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string text = slurp(csv);
  EXPECT_TRUE(text.starts_with(std::string(kSweepCsvHeader) + "\n"));
  EXPECT_EQ(text.find('\r'), std::string::npos);
  std::istringstream in(text);
  const std::vector<SweepCsvRow> rows = read_sweep_csv(in);
  ASSERT_EQ(rows.size(), 45u);

  const std::vector<double> temps = GridSpec{0.1, 4.0, 9}.values();
  const std::vector<double> fields = GridSpec{0.0, 2.0, 5}.values();
  const auto cells =
      bound_sweep(XXXParams{}, EsepPolicy::parse("closed-form"), temps, fields);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const SweepCsvRow& row = rows[k];
    const BoundReport& rep = cells[k].report;
    const auto rel = [](double a, double b) {
      return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
    };
    EXPECT_TRUE(rel(row.field_b, cells[k].field_b));
    EXPECT_TRUE(rel(row.temperature, cells[k].temperature));
    EXPECT_TRUE(rel(row.mean_energy, rep.mean_energy));
    EXPECT_TRUE(rel(row.esep, rep.esep));
    EXPECT_TRUE(rel(row.normalizer, rep.normalizer));
    EXPECT_NEAR(row.bound_raw, rep.bound, 1e-9);
    EXPECT_NEAR(row.bound_clipped, rep.clipped(), 1e-9);
    EXPECT_EQ(row.detected, rep.detected);
    // Internal consistency up to the propagated rounding of the printed
    // operands (10 significant digits).
    const double slack =
        1e-9 * (std::abs(row.esep) + std::abs(row.mean_energy)) / row.normalizer +
        1e-9 * std::abs(row.bound_raw) + 1e-12;
    EXPECT_NEAR(row.bound_raw, (row.esep - row.mean_energy) / row.normalizer,
                slack);
    EXPECT_EQ(row.bound_clipped, std::max(0.0, row.bound_raw));
  }
}

TEST(Cli, SweepToStdout) {
  const Result r = run_cli({"bound-sweep", "--J", "1", "--policy", "fixed:-2",
                            "--B-steps", "1", "--T-min", "1", "--T-max", "2",
                            "--T-steps", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  EXPECT_EQ(read_sweep_csv(in).size(), 2u);
}

TEST(Cli, ReadRejectsMalformedCsv) {
  std::istringstream wrong_header("a,b\n1,2\n");
  EXPECT_THROW(read_sweep_csv(wrong_header), InvalidArgument);
  std::istringstream short_row(std::string(kSweepCsvHeader) + "\n0,1,2\n");
  EXPECT_THROW(read_sweep_csv(short_row), InvalidArgument);
  std::istringstream bad_bool(std::string(kSweepCsvHeader) +
                              "\n0,1,-1,-2,3,0.3,0.3,yes\n");
  EXPECT_THROW(read_sweep_csv(bad_bool), InvalidArgument);
}

TEST(Cli, ReproduceFigureIsDeterministic) {
  TempDir a("enwit_fig_a");
  TempDir b("enwit_fig_b");
  ASSERT_EQ(run_cli({"reproduce-figure", "--output-dir", a.path().string()}).code,
            kExitOk);
  ASSERT_EQ(run_cli({"reproduce-figure", "--output-dir", b.path().string()}).code,
            kExitOk);
  for (const char* name : {"figure1_preset_B0.csv", "figure1_closed_form.csv"}) {
    const std::string x = slurp(a.path() / name);
    ASSERT_FALSE(x.empty()) << name;
    EXPECT_EQ(x, slurp(b.path() / name)) << name;
  }
  std::istringstream preset(slurp(a.path() / "figure1_preset_B0.csv"));
  const auto rows = read_sweep_csv(preset);
  ASSERT_EQ(rows.size(), 400u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.esep, -2.0);
    EXPECT_EQ(row.normalizer, 3.0);
  }
  std::istringstream closed(slurp(a.path() / "figure1_closed_form.csv"));
  EXPECT_EQ(read_sweep_csv(closed).size(), 41u * 400u);
}

}  // namespace
}  // namespace enwit::cli
