#include "agscale_cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace agscale::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& text, const std::string& what) {
  const std::string s = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("bad " + what + ": '" + text + "'");
  }
  return value;
}

long long to_integer(const std::string& text, const std::string& what) {
  const std::string s = trim(text);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("bad " + what + ": '" + text + "'");
  }
  return value;
}

}  // namespace

std::vector<double> Grid::points() const {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    // endpoints land exactly on start and stop
    out[static_cast<std::size_t>(i)] =
        i == count - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (count - 1);
  }
  return out;
}

Grid parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) throw InputError("grid must look like a:b:n, got '" + text + "'");
  Grid g;
  g.start = to_double(text.substr(0, first), "grid start");
  g.stop = to_double(text.substr(first + 1, second - first - 1), "grid stop");
  const long long n = to_integer(text.substr(second + 1), "grid count");
  if (n < 2 || n > 1000000) throw InputError("grid count must be in [2, 1e6]");
  g.count = static_cast<int>(n);
  return g;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(item, "list entry"));
  if (out.empty()) throw InputError("empty list");
  return out;
}

void RunConfig::validate() const {
  if (truncation < 1) throw InputError("truncation must be >= 1");
  if (degree < 4 || degree > 256) throw InputError("degree must be in [4, 256]");
  if (!(tol > 0.0)) throw InputError("tol must be positive");
  if (bits < 8 || bits > 1u << 20) throw InputError("bits must be in [8, 2^20]");
}

void apply_setting(RunConfig& config, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "truncation") {
    config.truncation = to_integer(value, "truncation");
  } else if (key == "tail") {
    if (value == "em") {
      config.tail = TailMode::kEulerMaclaurin;
    } else if (value == "truncate") {
      config.tail = TailMode::kTruncate;
    } else {
      throw InputError("tail must be 'em' or 'truncate'");
    }
  } else if (key == "degree") {
    config.degree = static_cast<int>(to_integer(value, "degree"));
  } else if (key == "tol") {
    config.tol = to_double(value, "tol");
  } else if (key == "grid") {
    config.grid = parse_grid(value);
  } else if (key == "out") {
    config.out = value;
  } else if (key == "bits") {
    const long long b = to_integer(value, "bits");
    if (b < 0) throw InputError("bits must be positive");
    config.bits = static_cast<unsigned>(b);
  } else if (key == "beta") {
    config.beta = parse_list(value);
  } else if (key == "q") {
    config.q = parse_list(value);
  } else {
    throw InputError("unknown config key '" + key + "'");
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError(path + ":" + std::to_string(number) + ": expected key = value");
    }
    apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

}  // namespace agscale::cli
