#include "donsum/fibersum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include <json.hpp>

#include "donsum/errors.hpp"
#include "donsum/qh2.hpp"

namespace donsum {

namespace {

constexpr long kGlueGenus = 2;

std::size_t find_pivot(const IntVec& sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (std::labs(sigma[i]) == 1) return i;
  }
  throw Error(Errc::InvalidArgument, "Sigma needs a coordinate equal to +-1 (non-primitive Sigma is unsupported)");
}

GaussRat coefficient_of(const StructureSeries& s, const IntVec& k) {
  for (const BasicClass& b : s.classes) {
    if (b.k == k) return b.coeff;
  }
  return GaussRat(0);
}

const Lattice& lattice(const GlueSide& side) { return side.series.owner.lattice; }
const IntVec& sigma(const GlueSide& side) { return side.series.owner.sigma; }

// The class attached to each variable, not each summand, must be orthogonal.
void check_orthogonal(const GlueSide& side, const Probe& p) {
  std::map<Var, GaussRat> against_sigma;
  for (const ProbeTerm& t : p) {
    against_sigma[t.var] += t.coeff * GaussRat(lattice(side).pair(t.cls, sigma(side)));
  }
  for (const auto& [var, value] : against_sigma) {
    if (!value.is_zero()) {
      throw Error(Errc::InvalidArgument, "probe class of " + var + " must be orthogonal to Sigma on " +
                                             side.series.owner.name);
    }
  }
}

Polynomial term(const GaussRat& c, const Var& v) { return Polynomial::monomial(c, Monomial::of(v)); }

}  // namespace

GlueInput make_glue_input(GlueSide side1, GlueSide side2, bool one_to_one) {
  for (GlueSide* side : {&side1, &side2}) {
    const ManifoldDescriptor& m = side->series.owner;
    if (!m.simple_type) throw Error(Errc::NotSimpleType, m.name + " is not of simple type");
    require_valid(side->series);
  }
  const long g1 = side1.series.owner.genus;
  const long g2 = side2.series.owner.genus;
  if (g1 != g2) throw Error(Errc::GenusMismatch, "genus " + std::to_string(g1) + " vs " + std::to_string(g2));
  if (g1 != kGlueGenus) {
    throw Error(Errc::GenusUnsupported, "gluing is implemented for genus 2 only, got " + std::to_string(g1));
  }
  GlueInput in;
  for (GlueSide* side : {&side1, &side2}) {
    if (!side->dbar) side->dbar = side->series.owner.dbar;
    if (side->dbar) side->dbar = normalize_dbar(side->series.owner, *side->dbar);
  }
  in.pivot1 = find_pivot(sigma(side1));
  in.pivot2 = find_pivot(sigma(side2));
  in.side1 = std::move(side1);
  in.side2 = std::move(side2);
  in.one_to_one = one_to_one;
  return in;
}

IntVec pi_image(const IntVec& k, const IntVec& sigma, std::size_t pivot) {
  // sigma[pivot] is +-1, so k[pivot] / sigma[pivot] is exact.
  const long q = k.at(pivot) * sigma.at(pivot);
  IntVec out = k;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= q * sigma[i];
  return out;
}

GaussRat sector_coefficient(long ks, long ls, const GaussRat& a, const GaussRat& b) {
  if (ks == 2 && ls == 2) return GaussRat(32) * a * b;
  if (ks == -2 && ls == -2) return GaussRat(-32) * a * b;
  return GaussRat(0);
}

GaussRat contraction_coefficient(long ks, long ls, const GaussRat& a, const GaussRat& b) {
  // <mu(Sigma)^l, mu(Sigma)^m> = 2^{-l-m} <h^l, h^m>, so the dual pairing in
  // that basis is 2^{l+m} times the dual pairing in the power basis.
  const RatMatrix dual = dual_pairing();
  GaussRat total(0);
  for (unsigned l = 0; l < 4; ++l) {
    for (unsigned m = 0; m < 4; ++m) {
      const GaussRat g = dual(l, m) * GaussRat(2).pow(static_cast<long>(l + m));
      total += GaussRat(ks).pow(l) * GaussRat(ls).pow(m) * g;
    }
  }
  return total * a * b;
}

ExpElement glued_eval(const GlueInput& in, const GluedProbe& p) {
  check_orthogonal(in.side1, p.alpha);
  check_orthogonal(in.side2, p.beta);
  if (p.d_var && !in.has_dbar()) throw Error(Errc::InvalidArgument, "a D-probe needs dbar on both sides");
  const Lattice& lat1 = lattice(in.side1);
  const Lattice& lat2 = lattice(in.side2);

  // Q of alpha + beta + tD + sSigma; Sigma is orthogonal to alpha, beta,
  // itself, and meets D once. D^2 = Dbar_1^2 + Dbar_2^2 = 0.
  Polynomial q = probe_square(lat1, p.alpha) + probe_square(lat2, p.beta);
  if (p.d_var) {
    const Polynomial cross = probe_pairing(lat1, p.alpha, *in.side1.dbar) + probe_pairing(lat2, p.beta, *in.side2.dbar);
    q += cross * term(GaussRat(2), *p.d_var);
    if (p.s_var) q += Polynomial::monomial(GaussRat(2), Monomial::of(*p.d_var) * Monomial::of(*p.s_var));
  }
  const Polynomial half_q = q * Polynomial(GaussRat::fraction(1, 2));

  ExpElement out;
  for (const BasicClass& kb : in.side1.series.classes) {
    const long ks = lat1.pair(kb.k, sigma(in.side1));
    for (const BasicClass& lb : in.side2.series.classes) {
      const long ls = lat2.pair(lb.k, sigma(in.side2));
      const GaussRat c = sector_coefficient(ks, ls, kb.coeff, lb.coeff);
      if (c.is_zero()) continue;
      Polynomial expo = half_q + probe_pairing(lat1, p.alpha, kb.k) + probe_pairing(lat2, p.beta, lb.k);
      if (p.d_var) {
        const long kd = lat1.pair(kb.k, *in.side1.dbar) + lat2.pair(lb.k, *in.side2.dbar) + ks;
        expo += term(GaussRat(kd), *p.d_var);
      }
      if (p.s_var) expo += term(GaussRat(ks), *p.s_var);
      out += ExpElement::exp(expo).scaled(c);
    }
  }
  return out;
}

ExpElement glue_h2(const GlueInput& in, const Probe& alpha, const Probe& beta) {
  return glued_eval(in, GluedProbe{alpha, beta, std::nullopt, std::nullopt});
}

ExpElement glue_with_d(const GlueInput& in, const Var& t, const std::optional<Var>& s) {
  if (!in.has_dbar()) throw Error(Errc::InvalidArgument, "glue_with_d needs dbar on both sides");
  const CoefVector v1 = v_vector(in.side1.series, *in.side1.dbar, t);
  const CoefVector v2 = v_vector(in.side2.series, *in.side2.dbar, t);
  const RatMatrix u = u_matrix(cap_parameters());
  // Crossing the neck shifts the t-frequency by K.Sigma.
  Polynomial up = term(GaussRat(2), t);
  Polynomial down = term(GaussRat(-2), t);
  if (s) {
    up += term(GaussRat(2), *s);
    down += term(GaussRat(-2), *s);
  }
  ExpElement out = (v1[0] * v2[0] * ExpElement::exp(up)).scaled(u(0, 0)) +
                   (v1[1] * v2[1] * ExpElement::exp(down)).scaled(u(1, 1));
  if (s) out = ExpElement::exp(Polynomial::monomial(GaussRat(1), Monomial::of(t) * Monomial::of(*s))) * out;
  return out;
}

KappaData kappa_construct(const IntVec& k, const IntVec& l, const GlueInput& in) {
  const Lattice& lat1 = lattice(in.side1);
  const Lattice& lat2 = lattice(in.side2);
  const long ks = lat1.pair(k, sigma(in.side1));
  const long ls = lat2.pair(l, sigma(in.side2));
  if (ks != ls || std::labs(ks) != 2) {
    throw Error(Errc::SectorMismatch,
                "need K.Sigma = L.Sigma = +-2, got " + std::to_string(ks) + " and " + std::to_string(ls));
  }
  KappaData d;
  d.k = k;
  d.l = l;
  d.pi1 = pi_image(k, sigma(in.side1), in.pivot1);
  d.pi2 = pi_image(l, sigma(in.side2), in.pivot2);
  d.sign = ks / 2;
  if (in.has_dbar()) d.kappa_dot_d = lat1.pair(k, *in.side1.dbar) + lat2.pair(l, *in.side2.dbar) + ks;
  d.kappa_square = lat1.square(k) + lat2.square(l) + 8 * (kGlueGenus - 1);
  d.coeff = sector_coefficient(ks, ls, coefficient_of(in.side1.series, k), coefficient_of(in.side2.series, l));
  return d;
}

SumRule rule_for(const GlueInput& in, const IntVec& k, const IntVec& l) {
  const Lattice& lat1 = lattice(in.side1);
  const Lattice& lat2 = lattice(in.side2);
  const long ks = lat1.pair(k, sigma(in.side1));
  const long ls = lat2.pair(l, sigma(in.side2));
  SumRule r;
  r.pi1 = pi_image(k, sigma(in.side1), in.pivot1);
  r.pi2 = pi_image(l, sigma(in.side2), in.pivot2);
  r.in_group = ks == ls;
  r.kind = (ks == 2 && ls == 2) ? RuleCase::Plus : (ks == -2 && ls == -2) ? RuleCase::Minus : RuleCase::Zero;
  r.sum = GaussRat(0);
  for (const BasicClass& kb : in.side1.series.classes) {
    if (pi_image(kb.k, sigma(in.side1), in.pivot1) != r.pi1) continue;
    for (const BasicClass& lb : in.side2.series.classes) {
      if (pi_image(lb.k, sigma(in.side2), in.pivot2) != r.pi2) continue;
      r.sources.emplace_back(kb.k, lb.k);
      r.sum += sector_coefficient(ks, ls, kb.coeff, lb.coeff);
    }
  }
  // No pair of basic classes over this fiber: the third case of the rule.
  if (r.sources.empty()) r.kind = RuleCase::Zero;
  return r;
}

GlueReport sum_rules(const GlueInput& in) {
  GlueReport report;
  report.topology = topology_compose(in.side1.series.owner, in.side2.series.owner);
  report.one_to_one = in.one_to_one;
  std::map<std::pair<IntVec, IntVec>, SumRule> fibers;
  for (const BasicClass& kb : in.side1.series.classes) {
    for (const BasicClass& lb : in.side2.series.classes) {
      SumRule r = rule_for(in, kb.k, lb.k);
      fibers.emplace(std::make_pair(r.pi1, r.pi2), std::move(r));
      const long ks = lattice(in.side1).pair(kb.k, sigma(in.side1));
      const long ls = lattice(in.side2).pair(lb.k, sigma(in.side2));
      if (ks == ls && std::labs(ks) == 2) report.kappas.push_back(kappa_construct(kb.k, lb.k, in));
    }
  }
  report.unique_kappa = true;
  for (auto& [key, r] : fibers) {
    if (!r.sum.is_zero() && r.sources.size() != 1) report.unique_kappa = false;
    report.rules.push_back(std::move(r));
  }
  // Glued classes only come from the +-2 sectors, so none pairs to 0 with Sigma.
  report.no_zero_sector =
      in.one_to_one && std::all_of(report.kappas.begin(), report.kappas.end(),
                                   [](const KappaData& k) { return k.sign != 0; });
  return report;
}

Prediction predict_coefficient(long g) {
  if (g < 2) throw Error(Errc::OutOfDomain, "the predictor needs genus >= 2");
  Prediction p;
  mpz_ui_pow_ui(p.value.get_mpz_t(), 2, static_cast<unsigned long>(7 * g - 9));
  p.theorem = g == 2;
  return p;
}

std::vector<WittenCheck> witten_glue_check(const GlueInput& in) {
  const ComposedTopology topo = topology_compose(in.side1.series.owner, in.side2.series.owner);
  const long e = witten_exponent(topo.euler, topo.signature);
  std::vector<WittenCheck> out;
  const Lattice& lat1 = lattice(in.side1);
  const Lattice& lat2 = lattice(in.side2);
  for (const BasicClass& kb : in.side1.series.classes) {
    if (!kb.sw) continue;
    const long ks = lat1.pair(kb.k, sigma(in.side1));
    for (const BasicClass& lb : in.side2.series.classes) {
      if (!lb.sw) continue;
      const long ls = lat2.pair(lb.k, sigma(in.side2));
      if (ks != ls || std::labs(ks) != 2) continue;
      WittenCheck w;
      w.k = kb.k;
      w.l = lb.k;
      w.glued = sector_coefficient(ks, ls, kb.coeff, lb.coeff).norm();
      w.witten = (GaussRat(2).pow(e) * *kb.sw * *lb.sw).norm();
      // Only magnitudes are compared; the sign depends on the choice of w.
      w.passed = w.glued == w.witten;
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::string rule_case_name(RuleCase c) {
  switch (c) {
    case RuleCase::Plus:
      return "plus";
    case RuleCase::Minus:
      return "minus";
    case RuleCase::Zero:
      return "zero";
  }
  return "zero";
}

std::string report_json(const GlueReport& r, const std::optional<std::string>& probe_value) {
  using nlohmann::json;
  json doc;
  json kappas = json::array();
  for (const KappaData& k : r.kappas) {
    json item{{"K", k.k},
              {"L", k.l},
              {"pi1", k.pi1},
              {"pi2", k.pi2},
              {"sign", k.sign},
              {"kappa_square", k.kappa_square},
              {"coeff", k.coeff.str()}};
    item["kappa_dot_d"] = k.kappa_dot_d ? json(*k.kappa_dot_d) : json(nullptr);
    kappas.push_back(std::move(item));
  }
  json rules = json::array();
  for (const SumRule& s : r.rules) {
    json sources = json::array();
    for (const auto& [k, l] : s.sources) sources.push_back(json{{"K", k}, {"L", l}});
    rules.push_back(json{{"pi1", s.pi1},
                         {"pi2", s.pi2},
                         {"case", rule_case_name(s.kind)},
                         {"sum", s.sum.str()},
                         {"in_group", s.in_group},
                         {"sources", sources}});
  }
  doc["kappas"] = std::move(kappas);
  doc["rules"] = std::move(rules);
  doc["other_fibers_sum"] = "0";
  doc["topology"] = json{{"euler", r.topology.euler},
                         {"signature", r.topology.signature},
                         {"b_plus", r.topology.b_plus},
                         {"genus", r.topology.genus},
                         {"d0_parity", r.topology.d0_parity}};
  doc["one_to_one"] = r.one_to_one;
  doc["no_zero_sector"] = r.no_zero_sector;
  doc["unique_kappa"] = r.unique_kappa;
  if (probe_value) doc["probe_value"] = *probe_value;
  return doc.dump(2) + "\n";
}

}  // namespace donsum
