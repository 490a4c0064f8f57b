#pragma once

#include <array>
#include <optional>

#include "donsum/exppoly.hpp"
#include "donsum/kmseries.hpp"
#include "donsum/matrix.hpp"
#include "donsum/qh2.hpp"

namespace donsum {

// Relative invariants of manifolds with boundary S^1 x Sigma, genus 2. A
// RelVector holds dual-basis components phi_l = D(z_l e^{t Dbar}) with
// z_l = 2^l Sigma^l; two of them pair through (1/4)M'.

using RelVector = std::array<ExpElement, 4>;

/// Coefficients of (e^{2s}, e^{-2s}, 1, s) after factoring out e^{ts}.
using CoefVector = std::array<ExpElement, 4>;

/// Extra closed cycle Sigma^a x^b inserted next to z_l.
struct CycleMonomial {
  unsigned sigma_power = 0;
  unsigned x_power = 0;
};

/// Shifts dbar by a multiple of Sigma so that dbar^2 = 0. Throws
/// NotNormalized when dbar^2 is odd, InvalidArgument when dbar.Sigma != 1.
IntVec normalize_dbar(const ManifoldDescriptor& m, const IntVec& dbar);

/// Sector sums (K.Sigma = 2, -2, 0) of a_i e^{t K_i.dbar}, fourth entry 0.
/// Throws NotNormalized if dbar^2 != 0, NotSimpleType for other owners.
CoefVector v_vector(const StructureSeries& s, const IntVec& dbar, const Var& t);

/// (1/4)M' times the multiplication matrix of exp(s mu(Sigma)).
ExpMatrix b_matrix(const Var& s);

/// Rows are the coefficients of e^{2s}, e^{-2s}, 1 and s in psi^T B(s) phi,
/// columns the components of phi. The s row carries 1/8, not 1/4: that is
/// what the extraction of psi^T B phi gives.
template <class R>
Matrix<R> a_matrix(const std::array<R, 4>& psi) {
  const R zero(0);
  const R q(GaussRat::fraction(1, 4));
  const R c128(GaussRat::fraction(1, 128));
  const R c16(GaussRat::fraction(1, 16));
  const R half(GaussRat::fraction(1, 2));
  const R& p0 = psi[0];
  const R& p1 = psi[1];
  const R& p2 = psi[2];
  const R& p3 = psi[3];
  Matrix<R> a{
      {zero, zero, (p3 * R(4) + p2 * R(16)) * c128, (p2 * R(4) + p3) * c128},
      {zero, zero, (p3 * R(4) - p2 * R(16)) * c128, (p2 * R(4) - p3) * c128},
      {p3 - p1 * R(16), p2 - p0 * R(16), p1 - p3 * c16, p0 - p2 * c16},
      {zero, (p3 - p1 * R(16)) * half, zero, (p1 - p3 * c16) * half},
  };
  return a.scaled(q);
}

/// Same matrix obtained by extracting the four s-families of psi^T B(s) phi
/// for phi running over the unit vectors. Entries of psi must not contain s.
ExpMatrix a_matrix_by_extraction(const RelVector& psi, const Var& s);

/// Universal pairing matrix with A^T U A = (1/4)M' for the cap parameters a.
/// Throws SingularCap when (a3 + 4a2)(a3 - 4a2)(a3 - 16a1) = 0.
RatMatrix u_matrix(const std::array<GaussRat, 4>& a);
/// The matrix as usually printed (entries 32, -32, -4, 8 over the same
/// denominators); it fails A^T U A = (1/4)M'. Kept for comparison.
RatMatrix u_matrix_printed(const std::array<GaussRat, 4>& a);

/// e^{d_sigma * t * s} phi^T B(s) psi, the combined series on e^{s Sigma + t D}.
/// Without t the exponential prefactor is omitted.
ExpElement pair_relative(const RelVector& phi, const RelVector& psi, const Var& s,
                         const std::optional<Var>& t = std::nullopt, long d_sigma = 1);

/// phi_l = D_X(z_l * extra * e^alpha) from the closed combined series. The
/// probe alpha must be orthogonal to Sigma (InvalidArgument otherwise).
RelVector relative_from_closed(const StructureSeries& s, const Probe& alpha = {}, CycleMonomial extra = {});

/// Dual coordinates of mu(extra) on the cap D^2 x Sigma; the unit gives (0,0,0,4).
RelVector cap_vector(CycleMonomial extra = {}, MuXConvention conv = MuXConvention::Corrected);

/// Cap parameters a for cap_vector(extra), as rationals.
std::array<GaussRat, 4> cap_parameters(CycleMonomial extra = {}, MuXConvention conv = MuXConvention::Corrected);

}  // namespace donsum
