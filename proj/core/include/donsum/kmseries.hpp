#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "donsum/exppoly.hpp"
#include "donsum/gaussrat.hpp"
#include "donsum/matrix.hpp"

namespace donsum {

using IntVec = std::vector<long>;

/// Integer lattice with a symmetric bilinear form, stored row-major.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t rank, std::vector<long> form);

  std::size_t rank() const noexcept { return rank_; }
  long form(std::size_t i, std::size_t j) const { return form_[i * rank_ + j]; }
  const std::vector<long>& form_entries() const noexcept { return form_; }
  bool is_symmetric() const;

  /// u . v; throws InvalidArgument on a length mismatch.
  long pair(const IntVec& u, const IntVec& v) const;
  long square(const IntVec& v) const { return pair(v, v); }
  RatMatrix gram() const;
  IntVec basis_vector(std::size_t i) const;

 private:
  std::size_t rank_ = 0;
  std::vector<long> form_;
};

/// A closed 4-manifold as far as the structure series needs it: a reduced
/// lattice holding the classes of interest plus topological numbers.
struct ManifoldDescriptor {
  std::string name;
  Lattice lattice;
  IntVec sigma;
  IntVec w;
  std::optional<IntVec> dbar;
  long b_plus = 0;
  long b1 = 0;
  long euler = 0;
  long signature = 0;
  long genus = 0;
  bool simple_type = true;
  /// Extra named classes usable in probes (sigma, w and dbar are implicit).
  std::map<std::string, IntVec> classes;

  /// -w^2 - 3(1 + b+)/2; throws Validation if it is not an integer.
  long d0() const;
  /// Looks up "sigma", "w", "dbar" or a named class; throws InvalidArgument.
  const IntVec& named(const std::string& name) const;
};

struct BasicClass {
  IntVec k;
  GaussRat coeff;
  std::optional<GaussRat> sw;  // Seiberg-Witten value, when known
};

/// DD^w = e^{Q/2} sum a_i e^{K_i} for the owner's w.
struct StructureSeries {
  ManifoldDescriptor owner;
  std::vector<BasicClass> classes;
};

struct Violation {
  std::string code;
  std::string detail;
};

std::vector<Violation> validate(const ManifoldDescriptor& m);
std::vector<Violation> validate(const StructureSeries& s);
/// Throws Error(Validation) listing every violation.
void require_valid(const StructureSeries& s);

/// Formal linear combination alpha = sum coeff * var * class.
struct ProbeTerm {
  GaussRat coeff;
  Var var;
  IntVec cls;
};
using Probe = std::vector<ProbeTerm>;

Probe probe(const Var& var, const IntVec& cls);
Probe operator+(Probe a, const Probe& b);
/// K . alpha as a linear form in the probe variables.
Polynomial probe_pairing(const Lattice& lattice, const Probe& alpha, const IntVec& k);
/// Q(alpha) as a quadratic form in the probe variables.
Polynomial probe_square(const Lattice& lattice, const Probe& alpha);

/// DD^w(alpha) = e^{Q(alpha)/2} sum a_i e^{K_i . alpha}.
ExpElement dd_eval(const StructureSeries& s, const Probe& alpha);

/// Combined series D_X = D^w + D^{w+Sigma} on x^x_power * e^alpha. Classes with
/// K.Sigma = 2 (mod 4) enter with real frequencies, the rest with frequencies
/// iK and the factor i^{-d0}.
ExpElement dx_eval(const StructureSeries& s, const Probe& alpha, unsigned x_power = 0);

/// D^w alone on x^x_power * e^alpha.
ExpElement dw_eval(const StructureSeries& s, const Probe& alpha, unsigned x_power = 0);

/// Reads a combined series evaluated on alpha = sum_k vars[k] * e_k (one
/// variable per lattice basis vector) back into a structure series.
StructureSeries recover_series(const ExpElement& combined, const ManifoldDescriptor& owner,
                               const std::vector<Var>& vars);

/// Re-signs coefficients for another w. Throws NonIntegralSign, or
/// InvalidArgument if w_new . Sigma is even.
StructureSeries change_w(const StructureSeries& s, const IntVec& w_new);

/// 2 + (7 chi + 11 sigma)/4; throws BadTopology if not integral.
long witten_exponent(long euler, long signature);
/// (-1)^{(K.w + w^2)/2} 2^{2 + (7 chi + 11 sigma)/4} sw.
GaussRat witten_coefficient(const ManifoldDescriptor& m, const IntVec& k, const GaussRat& sw);

struct ComposedTopology {
  long euler = 0;
  long signature = 0;
  long b_plus = 0;
  long genus = 0;
  long d0_parity = 0;  // d0(X) mod 2
};

/// Topology of the fiber sum along the genus-g surfaces. Throws GenusMismatch.
ComposedTopology topology_compose(const ManifoldDescriptor& m1, const ManifoldDescriptor& m2);

/// True when no term carries a positive power of `var` (no polynomial
/// factor in front of the exponentials). Throws QuadraticInVar.
bool simple_type_shape(const ExpElement& e, const Var& var);

}  // namespace donsum
