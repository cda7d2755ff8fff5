#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "phasegauge/cli/commands.hpp"
#include "phasegauge/cli/config.hpp"
#include "phasegauge/cli/csv.hpp"

using namespace phasegauge;
using namespace phasegauge::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "phasegauge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_app(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "phasegauge_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~EnvGuard() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Config, ParseGauge) {
  EXPECT_EQ(parse_gauge("analytic").kind, models::GaugeSpec::Kind::kAnalytic);
  EXPECT_EQ(parse_gauge("takagi").kind, models::GaugeSpec::Kind::kTakagi);
  EXPECT_DOUBLE_EQ(parse_gauge("gamma=3.1985").gamma, 3.1985);
  for (const char* bad : {"gamma=", "gamma=x", "Takagi", "gamma=1e400"}) {
    try {
      parse_gauge(bad);
      ADD_FAILURE() << bad;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.field(), "gauge");
    }
  }
}

TEST(Config, DefaultsAndKerrStep) {
  RunOverrides o;
  o.model = "kerr";
  const auto c = resolve(o);
  EXPECT_DOUBLE_EQ(c.integrator.dt, 1e-5);
  EXPECT_EQ(c.integrator.output_stride, 1000u);
  o.model = "hubbard";
  const auto h = resolve(o);
  EXPECT_DOUBLE_EQ(h.integrator.dt, 1e-3);
  EXPECT_EQ(h.integrator.output_stride, 10u);
  EXPECT_EQ(h.integrator.n_traj, 1000u);
}

TEST(Config, ErrorsNameTheField) {
  const auto field_of = [](RunOverrides o) {
    try {
      resolve(o);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("none");
  };
  RunOverrides o;
  EXPECT_EQ(field_of(o), "model");
  o.model = "bose";
  EXPECT_EQ(field_of(o), "model");
  o.model = "hubbard";
  o.gauge = "gamma=1";
  EXPECT_EQ(field_of(o), "gauge");
  o.gauge.reset();
  o.dt = -1.0;
  EXPECT_EQ(field_of(o), "dt");
  o.dt.reset();
  o.chi = 0.1;
  EXPECT_EQ(field_of(o), "chi");
  o.chi.reset();
  o.n_traj = 0;
  EXPECT_EQ(field_of(o), "n-traj");
}

TEST(Config, JsonFileAndLayering) {
  const auto parsed = parse_config_json(R"({"model": "fermi-bose", "kappa": 3, "seed": 9})");
  EXPECT_EQ(*parsed.model, "fermi-bose");
  EXPECT_DOUBLE_EQ(*parsed.kappa, 3.0);
  RunOverrides flags;
  flags.seed = 4;
  const auto merged = flags.layered_over(parsed);
  EXPECT_EQ(*merged.seed, 4u);
  EXPECT_DOUBLE_EQ(std::get<models::FermiBoseParams>(resolve(merged).model).kappa, 3.0);
  try {
    parse_config_json(R"({"model": "kerr", "gama": 1})");
    ADD_FAILURE();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "gama");
  }
  EXPECT_THROW(parse_config_json(R"({"n_traj": -3})"), ConfigError);
  EXPECT_THROW(parse_config_json("{"), ConfigError);
  EXPECT_THROW(load_config_file(scratch("missing.json")), IoError);
}

TEST(Config, EnvironmentOverrides) {
  {
    EnvGuard seed(kSeedEnv, "123");
    EnvGuard threads(kThreadsEnv, "3");
    const auto env = environment_overrides();
    EXPECT_EQ(*env.seed, 123u);
    EXPECT_EQ(*env.threads, 3u);
  }
  EnvGuard bad(kSeedEnv, "12x");
  EXPECT_THROW(environment_overrides(), ConfigError);
}

TEST(Csv, NumbersRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 1e22, 0.0}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
}

TEST(Cli, RunWritesSchemaAndFooter) {
  const auto path = scratch("run.csv");
  const auto r = invoke({"run", "--model", "hubbard", "--n-traj", "40", "--t-max", "0.1",
                         "--seed", "3", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto text = lines(slurp(path));
  ASSERT_GE(text.size(), 3u);
  EXPECT_EQ(text.front(), kCsvHeader);
  EXPECT_EQ(text.back(), "# practical_time=0.1");
  EXPECT_EQ(text.size(), 2u + 11u * 3u);
  const auto row = cells(text[1]);
  ASSERT_EQ(row.size(), 7u);
  EXPECT_EQ(row[0], "0");
  EXPECT_EQ(row[1], "site_occupation");
  EXPECT_EQ(row[6], "40");
}

TEST(Cli, SameSeedSameBytes) {
  const std::vector<std::string> args = {"run", "--model", "fermi-bose", "--gauge", "takagi",
                                         "--n-traj", "50", "--t-max", "0.2", "--seed", "5"};
  const auto a = invoke(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const auto b = invoke(threaded);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto reseeded = args;
  reseeded.back() = "6";
  EXPECT_NE(invoke(reseeded).out, a.out);
}

TEST(Cli, SeedFromEnvironmentFlagWins) {
  const std::vector<std::string> args = {"run", "--model", "hubbard", "--n-traj", "10",
                                         "--t-max", "0.05"};
  auto with_flag = args;
  with_flag.insert(with_flag.end(), {"--seed", "77"});
  const auto flagged = invoke(with_flag);
  EnvGuard seed(kSeedEnv, "77");
  EXPECT_EQ(invoke(args).out, flagged.out);
  auto other = args;
  other.insert(other.end(), {"--seed", "78"});
  EXPECT_NE(invoke(other).out, flagged.out);
}

TEST(Cli, ConfigFileFlagsWin) {
  const auto cfg = scratch("cfg.json");
  {
    std::ofstream out(cfg);
    out << R"({"model": "hubbard", "n_traj": 12, "t_max": 0.05, "seed": 1})";
  }
  const auto from_file = invoke({"run", "--config", cfg.string()});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_NE(from_file.out.find(",12\n"), std::string::npos);
  const auto overridden = invoke({"run", "--config", cfg.string(), "--n-traj", "13"});
  EXPECT_NE(overridden.out.find(",13\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const auto gamma = invoke({"run", "--model", "hubbard", "--gauge", "gamma=1"});
  EXPECT_EQ(gamma.code, kExitConfig);
  EXPECT_NE(gamma.err.find("gauge"), std::string::npos);
  EXPECT_EQ(invoke({"run", "--model", "kerr", "--gauge", "gamma=3.1985", "--n-traj", "4",
                    "--t-max", "0.001"})
                .code,
            kExitOk);
  EXPECT_EQ(invoke({"run", "--model", "hubbard", "--dt", "0"}).code, kExitConfig);
  EXPECT_EQ(invoke({"run", "--model", "hubbard", "--bogus"}).code, kExitConfig);
  EXPECT_EQ(invoke({"run", "--model", "hubbard", "--n-traj", "ten"}).code, kExitConfig);
  EXPECT_EQ(invoke({"reference", "--model", "hubbard", "--kind", "guess"}).code, kExitConfig);
  EXPECT_EQ(invoke({"benchmark", "fig7"}).code, kExitConfig);
  EXPECT_EQ(invoke({"run", "--config", scratch("nope.json").string()}).code, kExitIo);
  const auto blocker = scratch("file_not_dir");
  std::ofstream(blocker) << "x";
  EXPECT_EQ(invoke({"run", "--model", "hubbard", "--n-traj", "4", "--t-max", "0.01",
                    "--output", (blocker / "out.csv").string()})
                .code,
            kExitIo);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, ReferenceOutputs) {
  const auto hub = invoke({"reference", "--model", "hubbard", "--kind", "exact", "--t-max", "2"});
  ASSERT_EQ(hub.code, 0) << hub.err;
  int n_tot_rows = 0;
  for (const auto& l : lines(hub.out)) {
    const auto c = cells(l);
    if (c.size() == 7 && c[1] == "n_tot") {
      ++n_tot_rows;
      EXPECT_NEAR(std::stod(c[2]), 2.0, 1e-12);
      EXPECT_EQ(c[4], "0");
      EXPECT_EQ(c[5], "0");
      EXPECT_EQ(c[6], "");
    }
  }
  EXPECT_EQ(n_tot_rows, 201);

  const auto fb = invoke({"reference", "--model", "fermi-bose", "--kind", "exact"});
  EXPECT_EQ(cells(lines(fb.out)[1])[1], "n_mol");
  EXPECT_EQ(std::stod(cells(lines(fb.out)[1])[2]), 1.0);

  const auto kerr = invoke({"reference", "--model", "kerr", "--kind", "meanfield",
                            "--t-max", "3", "--omega", "0"});
  ASSERT_EQ(kerr.code, 0) << kerr.err;
  for (const auto& l : lines(kerr.out)) {
    const auto c = cells(l);
    if (c.size() == 7 && c[1] == "correlator_abs") EXPECT_NEAR(std::stod(c[2]), 1.0, 1e-9);
  }
}

TEST(Cli, BenchmarkWritesFiles) {
  const auto dir = scratch("bench");
  fs::remove_all(dir);
  const auto r = invoke({"benchmark", "fig5", "--output-dir", dir.string(), "--traj-scale",
                         "0.02", "--seed", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* f : {"fig5_exact.csv", "fig5_meanfield.csv", "fig5_analytic.csv",
                        "fig5_takagi.csv", "fig5_analytic_traces.csv", "fig5_summary.txt"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  EXPECT_NE(r.out.find("fig5: practical_time analytic="), std::string::npos);
  EXPECT_EQ(lines(slurp(dir / "fig5_takagi_traces.csv")).front(), kTraceHeader);
}
