#pragma once

#include <optional>
#include <string>
#include <vector>

#include "donsum/exppoly.hpp"
#include "donsum/floerpair.hpp"
#include "donsum/kmseries.hpp"

namespace donsum {

// Fiber sums X = Xbar_1 #_Sigma Xbar_2 along genus-2 surfaces of square 0.

struct GlueSide {
  StructureSeries series;
  std::optional<IntVec> dbar;  // Dbar.Sigma = 1; shifted to Dbar^2 = 0 on input
};

/// Validated pair of sides. Construct with make_glue_input.
struct GlueInput {
  GlueSide side1;
  GlueSide side2;
  /// Every 1-cycle of Sigma bounds a (-1)-disc on both sides.
  bool one_to_one = false;
  /// Coordinate where Sigma_i is +-1; used to pick pi-representatives.
  std::size_t pivot1 = 0;
  std::size_t pivot2 = 0;

  bool has_dbar() const { return side1.dbar.has_value() && side2.dbar.has_value(); }
};

/// Throws Validation, NotSimpleType, GenusMismatch, GenusUnsupported,
/// NotNormalized, or InvalidArgument (Sigma without a +-1 coordinate).
GlueInput make_glue_input(GlueSide side1, GlueSide side2, bool one_to_one = false);

/// Representative of K modulo Sigma with a zero at the pivot coordinate.
IntVec pi_image(const IntVec& k, const IntVec& sigma, std::size_t pivot);

/// The coefficient of the glued class built from a basic class with
/// K.Sigma = ks and coefficient a and one with L.Sigma = ls and coefficient b:
/// +32ab for (2, 2), -32ab for (-2, -2), 0 otherwise.
GaussRat sector_coefficient(long ks, long ls, const GaussRat& a, const GaussRat& b);

/// The same number by contracting (K.Sigma)^l (L.Sigma)^m against the dual
/// pairing in the basis mu(Sigma)^l.
GaussRat contraction_coefficient(long ks, long ls, const GaussRat& a, const GaussRat& b);

/// Probe on the glued manifold: alpha on side 1, beta on side 2 (both
/// orthogonal to Sigma), and optional multiples t D and s Sigma.
struct GluedProbe {
  Probe alpha;
  Probe beta;
  std::optional<Var> d_var;
  std::optional<Var> s_var;
};

/// DD^w_X on the probe: e^{Q/2} sum over sectors +-32 a b e^{kappa . probe}.
ExpElement glued_eval(const GlueInput& in, const GluedProbe& p);

/// DD^w_X(e^{alpha + beta}) for classes supported away from the neck.
ExpElement glue_h2(const GlueInput& in, const Probe& alpha, const Probe& beta);

/// DD^w_X(e^{tD}) through the relative vectors of both sides and the neck
/// matrix diag(U00, U11, 0) of the cap. With s, the value on e^{sSigma + tD}.
ExpElement glue_with_d(const GlueInput& in, const Var& t, const std::optional<Var>& s = std::nullopt);

struct KappaData {
  IntVec k;
  IntVec l;
  IntVec pi1;
  IntVec pi2;
  long sign = 0;                   // K.Sigma / 2
  std::optional<long> kappa_dot_d;  // needs both Dbar
  long kappa_square = 0;           // K^2 + L^2 + 8
  GaussRat coeff;
};

/// Throws SectorMismatch unless K.Sigma_1 = L.Sigma_2 = +-2. The coefficient
/// uses the basic-class coefficients of K and L (0 if either is not basic).
KappaData kappa_construct(const IntVec& k, const IntVec& l, const GlueInput& in);

enum class RuleCase { Plus, Minus, Zero };

struct SumRule {
  IntVec pi1;
  IntVec pi2;
  RuleCase kind = RuleCase::Zero;
  GaussRat sum;
  bool in_group = false;  // K.Sigma_1 = L.Sigma_2
  std::vector<std::pair<IntVec, IntVec>> sources;
};

/// Rule for the fiber over (pi(K), pi(L)) for arbitrary classes K, L.
SumRule rule_for(const GlueInput& in, const IntVec& k, const IntVec& l);

struct GlueReport {
  std::vector<KappaData> kappas;
  std::vector<SumRule> rules;
  ComposedTopology topology;
  bool one_to_one = false;
  /// In one-to-one mode: no glued class pairs to 0 with Sigma.
  bool no_zero_sector = false;
  /// Every nonzero rule comes from a single pair of basic classes.
  bool unique_kappa = false;
};

GlueReport sum_rules(const GlueInput& in);

struct Prediction {
  Integer value;
  bool theorem = false;
};

/// 2^{7g-9}: a theorem for g = 2 and a conjecture above. Throws OutOfDomain.
Prediction predict_coefficient(long g);

struct WittenCheck {
  IntVec k;
  IntVec l;
  Rational glued;   // |32 a b|^2
  Rational witten;  // |2^{2 + (7chi + 11sigma)/4} SW(K) SW(L)|^2 on the sum
  bool passed = false;
};

/// Compares glued coefficients with the Witten formula on the composed
/// topology, for every sector pair whose classes carry SW values.
std::vector<WittenCheck> witten_glue_check(const GlueInput& in);

std::string rule_case_name(RuleCase c);
/// Canonical JSON (sorted keys, exact strings) of a report.
std::string report_json(const GlueReport& r, const std::optional<std::string>& probe_value = std::nullopt);

}  // namespace donsum
