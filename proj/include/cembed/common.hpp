#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cembed {

/// Absolute tolerance used for every inf/sup comparison on distances.
/// Distances are finite-precision reals; a fixed tolerance keeps all
/// threshold decisions deterministic.
inline constexpr double kDefaultTol = 1e-9;

struct Tolerance {
  double abs = kDefaultTol;

  // a <= b up to tolerance
  bool le(double a, double b) const { return a <= b + abs; }
  // a >= b up to tolerance
  bool ge(double a, double b) const { return a >= b - abs; }
  // a definitely greater than b
  bool gt(double a, double b) const { return a > b + abs; }
  // a definitely less than b
  bool lt(double a, double b) const { return a < b - abs; }
};

/// Base error for the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent input (CLI exit status 2).
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

/// A configured search/element budget was exceeded (CLI exit status 2).
struct BudgetError : Error {
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

/// A construction refused to emit a map because a required runtime check
/// failed (CLI exit status 1). Carries the offending points as labels.
struct RefusalError : Error {
  std::vector<std::string> witness;
  RefusalError(const std::string& msg, std::vector<std::string> w = {})
      : Error(msg), witness(std::move(w)) {}
};

/// Search limits for group enumeration and geodesic searches.
struct Budget {
  long long max_elements = 2'000'000;
  long long max_geodesics = 20'000;   // per endpoint
};

/// Deterministic RNG wrapper. std::mt19937_64 output is fully specified by
/// the standard; the distribution helpers below avoid std::*_distribution,
/// whose sequences are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [lo, hi], inclusive
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = gen_();
    while (v >= limit) v = gen_();
    return lo + static_cast<std::int64_t>(v % span);
  }

  // standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cembed
