#pragma once

#include <ostream>
#include <string>

#include <agscale/cf_core.hpp>

#include "agscale_cli/config.hpp"

namespace agscale::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2 };

/// Parses "p/q", a decimal "0.xyz" (exact), a truncated decimal "0.xyz..."
/// (enclosure [0.xyz, 0.xyz + 10^-k]), or a named surd: "golden",
/// "sqrt2-1", "surdK" for the purely periodic [K, K, ...].
RealEnclosure parse_real_literal(const std::string& text, unsigned bits);

/// 17 significant digits.
std::string csv_number(double x);

int cmd_expand(const std::string& literal, std::size_t n, const RunConfig& config,
               std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_pressure(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_free_energy(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_dimq(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace agscale::cli
