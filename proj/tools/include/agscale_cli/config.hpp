#pragma once

// Run configuration of the command-line tool: built-in defaults, then a flat
// `key = value` file, then command-line flags.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <agscale/alphabet.hpp>

namespace agscale::cli {

/// Bad flag value, bad config line or unparseable literal (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  std::vector<double> points() const;
};

/// "a:b:n" with n >= 2.
Grid parse_grid(const std::string& text);
/// "x,y,z"
std::vector<double> parse_list(const std::string& text);

struct RunConfig {
  std::int64_t truncation = 200;
  TailMode tail = TailMode::kEulerMaclaurin;
  int degree = 16;
  double tol = 1e-9;
  std::optional<Grid> grid;  ///< command-specific default when unset
  std::string out;           ///< empty: stdout
  unsigned bits = 256;       ///< precision of named surds for `expand`
  std::vector<double> beta{1.0};
  std::vector<double> q{2, 4, 8, 16, 100, 1000};

  AlphabetSpec alphabet() const { return {1, truncation, tail}; }
  /// Throws InputError when a field is out of range.
  void validate() const;
};

/// Applies one `key = value` setting. Keys: truncation, tail (em | truncate),
/// degree, tol, grid, out, bits, beta, q.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Applies every setting of a config file; `#` starts a comment.
void apply_config_file(RunConfig& config, const std::string& path);

}  // namespace agscale::cli
