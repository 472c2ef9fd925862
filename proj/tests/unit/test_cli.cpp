#include <agscale_cli/checks.hpp>
#include <agscale_cli/commands.hpp>
#include <agscale_cli/config.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

using namespace agscale;
using namespace agscale::cli;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Config, GridAndList) {
  const Grid g = parse_grid("0.1:0.9:5");
  const auto pts = g.points();
  ASSERT_EQ(pts.size(), 5u);
  EXPECT_DOUBLE_EQ(pts.front(), 0.1);
  EXPECT_DOUBLE_EQ(pts.back(), 0.9);
  EXPECT_NEAR(pts[2], 0.5, 1e-15);
  EXPECT_THROW(parse_grid("0:1"), InputError);
  EXPECT_THROW(parse_grid("0:1:1"), InputError);
  EXPECT_THROW(parse_grid("a:1:3"), InputError);
  EXPECT_EQ(parse_list("1,2.5,-3"), (std::vector<double>{1, 2.5, -3}));
  EXPECT_THROW(parse_list("1,,2"), InputError);
}

TEST(Config, SettingsAndValidation) {
  RunConfig c;
  apply_setting(c, "truncation", "500");
  apply_setting(c, "tail", "truncate");
  apply_setting(c, "degree", "24");
  apply_setting(c, "tol", "1e-8");
  EXPECT_EQ(c.truncation, 500);
  EXPECT_EQ(c.tail, TailMode::kTruncate);
  EXPECT_EQ(c.degree, 24);
  EXPECT_DOUBLE_EQ(c.tol, 1e-8);
  EXPECT_EQ(c.alphabet().truncation, 500);
  EXPECT_THROW(apply_setting(c, "tail", "sometimes"), InputError);
  EXPECT_THROW(apply_setting(c, "colour", "red"), InputError);
  EXPECT_THROW(apply_setting(c, "degree", "12x"), InputError);
  c.degree = 2;
  EXPECT_THROW(c.validate(), InputError);
}

TEST(Config, FileIsOverriddenByLaterSettings) {
  const auto path = temp_file("agscale_cfg_test.conf",
                              "# run settings\ntruncation = 300\ntol = 1e-7  # loose\n\ngrid = 0.2:0.4:3\n");
  RunConfig c;
  apply_config_file(c, path.string());
  EXPECT_EQ(c.truncation, 300);
  EXPECT_DOUBLE_EQ(c.tol, 1e-7);
  ASSERT_TRUE(c.grid.has_value());
  EXPECT_EQ(c.grid->count, 3);
  apply_setting(c, "truncation", "50");  // a flag, applied after the file
  EXPECT_EQ(c.truncation, 50);
  std::filesystem::remove(path);

  const auto bad = temp_file("agscale_cfg_bad.conf", "truncation 300\n");
  EXPECT_THROW(apply_config_file(c, bad.string()), InputError);
  std::filesystem::remove(bad);
  EXPECT_THROW(apply_config_file(c, "/nonexistent/agscale.conf"), InputError);
}

TEST(Literals, AllForms) {
  EXPECT_TRUE(parse_real_literal("2/3", 64).is_exact());
  EXPECT_EQ(parse_real_literal("0.25", 64).lo, Rational(1, 4));
  const RealEnclosure trunc = parse_real_literal("0.414...", 64);
  EXPECT_EQ(trunc.lo, Rational(414, 1000));
  EXPECT_EQ(trunc.hi, Rational(415, 1000));
  EXPECT_FALSE(parse_real_literal("golden", 64).is_exact());
  EXPECT_THROW(parse_real_literal("3/2", 64), InputError);
  EXPECT_THROW(parse_real_literal("1/0", 64), InputError);
  EXPECT_THROW(parse_real_literal("pi", 64), InputError);
  EXPECT_THROW(parse_real_literal("surd0", 64), InputError);
}

TEST(Commands, ExpandPrintsDigitsAndTrace) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_expand("2/3", 10, RunConfig{}, out, err), kOk);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "[1,2] (terminates)");
  std::getline(lines, line);
  EXPECT_EQ(line, "n,digit,sum_log_digits,log_q,ratio");
  std::getline(lines, line);
  EXPECT_EQ(line, "1,1,0,0,0");

  std::ostringstream golden;
  EXPECT_EQ(cmd_expand("golden", 5, RunConfig{}, golden, err), kOk);
  EXPECT_EQ(first_line(golden.str()), "[1,1,1,1,1]");
}

TEST(Commands, ExpandReportsExhaustedPrecision) {
  std::ostringstream out, err;
  RunConfig c;
  c.bits = 32;
  EXPECT_EQ(cmd_expand("sqrt2-1", 500, c, out, err), kInputError);
  EXPECT_NE(err.str().find("certain prefix"), std::string::npos);
  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_expand("0.5...", 3, RunConfig{}, out2, err2), kInputError);
}

TEST(Commands, CsvHeaders) {
  std::ostringstream err;
  RunConfig c;
  c.q = {2};
  std::ostringstream dimq;
  EXPECT_EQ(cmd_dimq(c, dimq, err), kOk);
  EXPECT_EQ(first_line(dimq.str()), "q,dim,ratio");

  c.grid = parse_grid("0.8:1.2:3");
  c.beta = {0.5};
  std::ostringstream pressure;
  EXPECT_EQ(cmd_pressure(c, pressure, err), kOk);
  EXPECT_EQ(first_line(pressure.str()), "t,beta,P,lower,upper");

  c.grid = parse_grid("0.4:0.6:2");
  std::ostringstream spectrum;
  EXPECT_EQ(cmd_spectrum(c, spectrum, err), kOk);
  EXPECT_EQ(first_line(spectrum.str()), "alpha,beta,t,f,err");

  c.grid = parse_grid("0:1:2");
  std::ostringstream free_energy;
  EXPECT_EQ(cmd_free_energy(c, free_energy, err), kOk);
  EXPECT_EQ(first_line(free_energy.str()), "beta,t,tprime,residual");
}

TEST(Commands, InputErrorsExitWithTwo) {
  std::ostringstream out, err;
  RunConfig c;
  c.grid = parse_grid("0.5:1.5:3");
  EXPECT_EQ(cmd_spectrum(c, out, err), kInputError);
  c = RunConfig{};
  c.q = {2.5};
  EXPECT_EQ(cmd_dimq(c, out, err), kInputError);
  c = RunConfig{};
  c.out = "/nonexistent/dir/out.csv";
  EXPECT_EQ(cmd_dimq(c, out, err), kInputError);
}

TEST(Commands, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "agscale_expand_out.csv";
  RunConfig c;
  c.out = path.string();
  std::ostringstream out, err;
  EXPECT_EQ(cmd_expand("1/3", 3, c, out, err), kOk);
  EXPECT_TRUE(out.str().empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "[3] (terminates)");
  std::filesystem::remove(path);
}

TEST(Checks, CriteriaAreNumberedInOrder) {
  const auto all = criteria();
  ASSERT_EQ(all.size(), 14u);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].number, static_cast<int>(i) + 1);
    EXPECT_FALSE(all[i].name.empty());
  }
  EXPECT_EQ(short_number(0.5), "0.5");
  EXPECT_EQ(csv_number(0.1), "0.10000000000000001");
}

TEST(Checks, FirstCriterionPasses) {
  const auto results = criteria().front().run();
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.pass) << r.id << ' ' << r.got;
}
