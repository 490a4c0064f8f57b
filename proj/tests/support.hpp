#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <string>

#include "donsum/exppoly.hpp"
#include "donsum/gaussrat.hpp"
#include "donsum/kmseries.hpp"
#include "donsum/manifold_file.hpp"

namespace donsum::test {

using Point = std::map<Var, double>;

inline std::complex<double> numeric(const GaussRat& c) { return {c.re().get_d(), c.im().get_d()}; }

inline std::complex<double> numeric(const Polynomial& p, const Point& at) {
  std::complex<double> total = 0;
  for (const auto& [mono, coeff] : p.terms()) {
    std::complex<double> v = numeric(coeff);
    for (const auto& [var, power] : mono.powers()) v *= std::pow(at.at(var), static_cast<int>(power));
    total += v;
  }
  return total;
}

/// Floating evaluation, used as an oracle independent of the exact algebra.
inline std::complex<double> numeric(const ExpElement& e, const Point& at) {
  std::complex<double> total = 0;
  for (const auto& t : e.terms()) {
    std::complex<double> v = numeric(t.coeff) * std::exp(numeric(t.expo, at));
    for (const auto& [var, power] : t.mono.powers()) v *= std::pow(at.at(var), static_cast<int>(power));
    total += v;
  }
  return total;
}

inline std::string data_path(const std::string& name) { return std::string(DONSUM_TEST_DATA) + "/" + name; }

inline StructureSeries k3() { return load_manifold(data_path("k3_2blowup.json")); }

/// Small random Gaussian rationals for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  GaussRat rational(bool complex = false) {
    GaussRat re = GaussRat::fraction(integer(-9, 9), integer(1, 6));
    if (!complex) return re;
    return re + GaussRat::fraction(integer(-9, 9), integer(1, 6)) * GaussRat::i();
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline constexpr int kInstances = 100;

}  // namespace donsum::test
