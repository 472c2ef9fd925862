// agscale: continued-fraction expansions, pressure, free energy, multifractal
// spectrum and restricted dimensions of the Gauss system as CSV.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "agscale_cli/commands.hpp"
#include "agscale_cli/config.hpp"

namespace {

struct Flags {
  std::optional<std::string> config_path;
  std::optional<std::string> truncation;
  std::optional<std::string> tail;
  std::optional<std::string> degree;
  std::optional<std::string> tol;
  std::optional<std::string> grid;
  std::optional<std::string> out;
  std::optional<std::string> bits;
  std::optional<std::string> beta;
  std::optional<std::string> q;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "key = value file; flags override it");
  cmd->add_option("--truncation", f.truncation, "largest explicitly summed digit M (default 200)");
  cmd->add_option("--tail", f.tail, "digits above M: em (Euler-Maclaurin fold, default) or truncate");
  cmd->add_option("--degree", f.degree, "collocation degree of the transfer operator (default 16)");
  cmd->add_option("--tol", f.tol, "solver tolerance (default 1e-9)");
  cmd->add_option("--grid", f.grid, "curve grid a:b:n");
  cmd->add_option("--out", f.out, "write output to PATH instead of stdout");
}

agscale::cli::RunConfig build_config(const Flags& f) {
  agscale::cli::RunConfig config;
  if (f.config_path) agscale::cli::apply_config_file(config, *f.config_path);
  const auto set = [&](const char* key, const std::optional<std::string>& v) {
    if (v) agscale::cli::apply_setting(config, key, *v);
  };
  set("truncation", f.truncation);
  set("tail", f.tail);
  set("degree", f.degree);
  set("tol", f.tol);
  set("grid", f.grid);
  set("out", f.out);
  set("bits", f.bits);
  set("beta", f.beta);
  set("q", f.q);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic-geometric pressure and multifractal spectrum of the Gauss map"};
  app.require_subcommand(1);
  Flags flags;

  std::string literal;
  std::size_t count = 20;
  auto* expand = app.add_subcommand("expand", "continued-fraction digits and scaling ratios of x");
  expand->add_option("x", literal, "p/q, 0.ddd, 0.ddd... (truncated), golden, sqrt2-1, surdK")
      ->required();
  expand->add_option("n", count, "number of digits")->required();
  expand->add_option("--bits", flags.bits, "precision of named surds in bits (default 256)");
  expand->add_option("--out", flags.out, "write output to PATH instead of stdout");
  expand->add_option("--config", flags.config_path, "key = value file; flags override it");

  auto* spectrum = app.add_subcommand("spectrum", "f(alpha) as CSV alpha,beta,t,f,err");
  add_common(spectrum, flags);
  auto* pressure = app.add_subcommand("pressure", "P(t, beta) as CSV t,beta,P,lower,upper (grid over t)");
  add_common(pressure, flags);
  pressure->add_option("--beta", flags.beta, "comma-separated beta values (default 1)");
  auto* free_energy = app.add_subcommand("free-energy", "t(beta) as CSV beta,t,tprime,residual");
  add_common(free_energy, flags);
  auto* dimq = app.add_subcommand("dimq", "dim I_q as CSV q,dim,ratio");
  add_common(dimq, flags);
  dimq->add_option("--q", flags.q, "comma-separated q values (default 2,4,8,16,100,1000)");
  auto* verify = app.add_subcommand("verify", "run the verification suite; exit 1 on any FAIL");
  verify->add_option("--out", flags.out, "write the table to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return agscale::cli::kInputError;
  }

  agscale::cli::RunConfig config;
  try {
    config = build_config(flags);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return agscale::cli::kInputError;
  }

  using namespace agscale::cli;
  if (expand->parsed()) return cmd_expand(literal, count, config, std::cout, std::cerr);
  if (spectrum->parsed()) return cmd_spectrum(config, std::cout, std::cerr);
  if (pressure->parsed()) return cmd_pressure(config, std::cout, std::cerr);
  if (free_energy->parsed()) return cmd_free_energy(config, std::cout, std::cerr);
  if (dimq->parsed()) return cmd_dimq(config, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(config, std::cout, std::cerr);
  return kInputError;
}
