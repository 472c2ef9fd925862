#include "agscale_cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>

#include <agscale/errors.hpp>
#include <agscale/pressure.hpp>
#include <agscale/thermodynamics.hpp>

#include "agscale_cli/checks.hpp"

namespace agscale::cli {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt pow10(std::size_t k) {
  BigInt p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 10;
  return p;
}

// CSV fields never contain commas or newlines.
std::string field(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

// Writes to --out when set, else to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InputError("cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

SolverConfig solver_config(const RunConfig& config) {
  SolverConfig s;
  s.alphabet = config.alphabet();
  s.degree = config.degree;
  return s;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const PrecisionExhausted& e) {
    err << "precision exhausted: " << e.what() << " (certain prefix " << e.certain_prefix()
        << ")\n";
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

RealEnclosure parse_real_literal(const std::string& text, unsigned bits) {
  if (text == "golden") return enclose_surd(5, -1, 2, bits);
  if (text == "sqrt2-1") return enclose_surd(2, -1, 1, bits);
  if (text.rfind("surd", 0) == 0 && all_digits(text.substr(4))) {
    const long long k = std::stoll(text.substr(4));
    if (k < 1 || k > 1000000) throw InputError("surdK needs 1 <= K <= 1e6");
    return enclose_surd(k * k + 4, -k, 2, bits);  // [K, K, ...] = (sqrt(K^2+4) - K)/2
  }

  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const std::string p = text.substr(0, slash);
    const std::string q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw InputError("bad rational '" + text + "'");
    const BigInt den(q);
    if (den == 0) throw InputError("zero denominator");
    const Rational x(BigInt(p), den);
    if (x <= 0 || x >= 1) throw InputError("number must lie in (0, 1)");
    return RealEnclosure::exact(x);
  }

  std::string s = text;
  bool truncated = false;
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "...") == 0) {
    truncated = true;
    s.erase(s.size() - 3);
  }
  if (s.rfind("0.", 0) == 0) s.erase(0, 1);
  if (s.empty() || s[0] != '.' || !all_digits(s.substr(1))) {
    throw InputError("cannot parse '" + text + "' (expected p/q, 0.ddd, 0.ddd..., golden, "
                     "sqrt2-1 or surdK)");
  }
  const std::string digits = s.substr(1);
  const BigInt scale = pow10(digits.size());
  const BigInt num(digits);
  const Rational lo(num, scale);
  const Rational hi = truncated ? Rational(num + 1, scale) : lo;
  if (lo <= 0 && !truncated) throw InputError("number must lie in (0, 1)");
  if (hi > 1) throw InputError("number must lie in (0, 1)");
  return {lo, hi};
}

int cmd_expand(const std::string& literal, std::size_t n, const RunConfig& config,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (n == 0) throw InputError("digit count must be >= 1");
    const Expansion e = expand_real(parse_real_literal(literal, config.bits), n);
    Sink sink(config.out, out);
    std::ostream& os = *sink;
    os << '[';
    for (std::size_t i = 0; i < e.digits.size(); ++i) os << (i ? "," : "") << e.digits[i];
    os << ']' << (e.terminated ? " (terminates)" : "") << '\n';
    os << "n,digit,sum_log_digits,log_q,ratio\n";
    const auto trace = log_q_trace(DigitWord(e.digits));
    for (std::size_t i = 0; i < trace.size(); ++i) {
      // q_1 = 1 only for the word [1]; its numerator is 0 as for every all-ones word
      const double ratio = std::isnan(trace[i].ratio) ? 0.0 : trace[i].ratio;
      os << trace[i].n << ',' << e.digits[i] << ',' << csv_number(trace[i].sum_log_digits) << ','
         << csv_number(trace[i].log_q) << ',' << csv_number(ratio) << '\n';
    }
    return kOk;
  });
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const Grid grid = config.grid.value_or(Grid{0.05, 0.95, 19});
    const auto alphas = grid.points();
    for (double a : alphas) {
      if (!(a > 0.0 && a < 1.0)) throw InputError("spectrum grid must lie inside (0, 1)");
    }
    const auto curve = spectrum_curve(alphas, config.tol, solver_config(config));
    Sink sink(config.out, out);
    std::ostream& os = *sink;
    os << "alpha,beta,t,f,err\n";
    std::size_t failures = 0;
    for (const auto& p : curve) {
      os << csv_number(p.alpha) << ',' << csv_number(p.beta) << ',' << csv_number(p.t) << ','
         << csv_number(p.f) << ',';
      if (p.failure) {
        ++failures;
        os << field("error: " + *p.failure) << '\n';
      } else {
        os << csv_number(p.error) << '\n';
      }
    }
    return failures == curve.size() ? kInputError : kOk;
  });
}

int cmd_pressure(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const Grid grid = config.grid.value_or(Grid{0.0, 2.0, 9});
    Sink sink(config.out, out);
    std::ostream& os = *sink;
    os << "t,beta,P,lower,upper\n";
    for (double beta : config.beta) {
      for (double t : grid.points()) {
        PressureQuery q;
        q.t = t;
        q.beta = beta;
        q.alphabet = config.alphabet();
        q.tol = config.tol;
        const PressureEstimate p = pressure(q);
        os << csv_number(t) << ',' << csv_number(beta) << ',' << csv_number(p.value) << ','
           << csv_number(p.lower) << ',' << csv_number(p.upper) << '\n';
      }
    }
    return kOk;
  });
}

int cmd_free_energy(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const Grid grid = config.grid.value_or(Grid{-1.0, 2.0, 7});
    const SolverConfig solver = solver_config(config);
    const double tol = std::min(config.tol, 1e-11);
    Sink sink(config.out, out);
    std::ostream& os = *sink;
    os << "beta,t,tprime,residual\n";
    for (double beta : grid.points()) {
      const FreeEnergySample s = solve_t(beta, tol, solver);
      const double tp = t_prime(beta, 1e-4, tol, solver);
      os << csv_number(beta) << ',' << csv_number(s.t) << ',' << csv_number(tp) << ','
         << csv_number(s.residual) << '\n';
    }
    return kOk;
  });
}

int cmd_dimq(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    Sink sink(config.out, out);
    std::ostream& os = *sink;
    os << "q,dim,ratio\n";
    for (double qd : config.q) {
      if (qd < 1 || qd != std::floor(qd)) throw InputError("q must be a positive integer");
      const auto q = static_cast<std::int64_t>(qd);
      const double dim = dim_Iq(q, config.tol);
      const double lq = std::log(qd);
      const double ratio = q >= 3 ? (dim - 0.5) * lq / std::log(lq) : std::nan("");
      os << q << ',' << csv_number(dim) << ',' << csv_number(ratio) << '\n';
    }
    return kOk;
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Sink sink(config.out, out);
    std::ostream& os = *sink;
    os << "id,expected,got,tol,status\n";
    int failed = 0;
    int total = 0;
    for (const Criterion& c : criteria()) {
      for (const CheckResult& r : c.run()) {
        ++total;
        if (!r.pass) ++failed;
        os << field(r.id) << ',' << field(r.expected) << ',' << field(r.got) << ','
           << field(r.tol) << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
        os.flush();
      }
    }
    err << (total - failed) << " of " << total << " checks passed\n";
    return failed == 0 ? kOk : kVerifyFailed;
  });
}

}  // namespace agscale::cli
