#include "donsum/kmseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "donsum/errors.hpp"

namespace donsum {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

std::string vec_str(const IntVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

// ----------------------------------------------------------------- Lattice

Lattice::Lattice(std::size_t rank, std::vector<long> form) : rank_(rank), form_(std::move(form)) {
  if (rank_ == 0) throw Error(Errc::InvalidArgument, "lattice rank must be positive");
  if (form_.size() != rank_ * rank_) {
    throw Error(Errc::InvalidArgument, "form has " + std::to_string(form_.size()) + " entries, expected " +
                                           std::to_string(rank_ * rank_));
  }
}

bool Lattice::is_symmetric() const {
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = i + 1; j < rank_; ++j) {
      if (form(i, j) != form(j, i)) return false;
    }
  }
  return true;
}

long Lattice::pair(const IntVec& u, const IntVec& v) const {
  if (u.size() != rank_ || v.size() != rank_) {
    throw Error(Errc::InvalidArgument, "vector length does not match lattice rank " + std::to_string(rank_));
  }
  long total = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) total += u[i] * form(i, j) * v[j];
  }
  return total;
}

RatMatrix Lattice::gram() const {
  RatMatrix g(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) g(i, j) = form(i, j);
  }
  return g;
}

IntVec Lattice::basis_vector(std::size_t i) const {
  IntVec v(rank_, 0);
  v.at(i) = 1;
  return v;
}

// -------------------------------------------------------------- descriptor

long ManifoldDescriptor::d0() const {
  const long twice = -2 * lattice.square(w) - 3 * (1 + b_plus);
  if (twice % 2 != 0) throw Error(Errc::Validation, "d0 is not an integer (b+ must be odd)");
  return twice / 2;
}

const IntVec& ManifoldDescriptor::named(const std::string& key) const {
  if (key == "sigma") return sigma;
  if (key == "w") return w;
  if (key == "dbar" || key == "D") {
    if (!dbar) throw Error(Errc::InvalidArgument, "manifold " + name + " has no dbar class");
    return *dbar;
  }
  auto it = classes.find(key);
  if (it == classes.end()) throw Error(Errc::InvalidArgument, "unknown class '" + key + "' in " + name);
  return it->second;
}

std::vector<Violation> validate(const ManifoldDescriptor& m) {
  std::vector<Violation> out;
  const Lattice& lat = m.lattice;
  if (!lat.is_symmetric()) out.push_back({"form", "intersection form is not symmetric"});

  bool lengths_ok = true;
  auto check_len = [&](const std::string& what, const IntVec& v) {
    if (v.size() != lat.rank()) {
      out.push_back({"vector length", what + " has length " + std::to_string(v.size()) + ", lattice rank is " +
                                          std::to_string(lat.rank())});
      lengths_ok = false;
    }
  };
  check_len("sigma", m.sigma);
  check_len("w", m.w);
  if (m.dbar) check_len("dbar", *m.dbar);
  for (const auto& [n, v] : m.classes) check_len("class " + n, v);

  if (m.b1 != 0) out.push_back({"b1", "only b1 = 0 is supported"});
  if (mod(m.b_plus - m.b1, 2) != 1 || m.b_plus <= 1) {
    out.push_back({"suitable", "need b+ - b1 odd and b+ > 1"});
  }
  if (m.genus < 1) out.push_back({"genus", "genus must be at least 1"});
  if (!lengths_ok) return out;

  if (lat.square(m.sigma) != 0) {
    out.push_back({"sigma self-intersection", "Sigma.Sigma = " + std::to_string(lat.square(m.sigma))});
  }
  if (mod(lat.pair(m.w, m.sigma), 2) != 1) out.push_back({"w parity", "w.Sigma must be odd"});
  if (mod(-2 * lat.square(m.w) - 3 * (1 + m.b_plus), 2) != 0) out.push_back({"d0", "d0 is not an integer"});
  if (m.dbar && lat.pair(*m.dbar, m.sigma) != 1) {
    out.push_back({"dbar", "dbar.Sigma = " + std::to_string(lat.pair(*m.dbar, m.sigma)) + ", expected 1"});
  }
  return out;
}

std::vector<Violation> validate(const StructureSeries& s) {
  std::vector<Violation> out = validate(s.owner);
  const ManifoldDescriptor& m = s.owner;
  const Lattice& lat = m.lattice;
  if (!s.classes.empty() && !m.simple_type) {
    out.push_back({"simple type", "a structure series needs a simple-type manifold"});
  }
  std::set<IntVec> seen;
  for (const BasicClass& b : s.classes) {
    const std::string label = "basic class " + vec_str(b.k);
    if (b.k.size() != lat.rank()) {
      out.push_back({"vector length", label + " has the wrong length"});
      continue;
    }
    if (!seen.insert(b.k).second) out.push_back({"duplicate class", label + " listed twice"});
    for (std::size_t i = 0; i < lat.rank(); ++i) {
      const IntVec e = lat.basis_vector(i);
      if (mod(lat.pair(b.k, e) - lat.square(e), 2) != 0) {
        out.push_back({"characteristic", label + " is not characteristic on basis vector " + std::to_string(i)});
        break;
      }
    }
    if (m.sigma.size() == lat.rank()) {
      const long ks = lat.pair(b.k, m.sigma);
      if (mod(ks, 2) != 0 || std::labs(ks) > 2 * m.genus - 2) {
        out.push_back({"adjunction/parity", label + " has K.Sigma = " + std::to_string(ks)});
      }
    }
  }
  return out;
}

void require_valid(const StructureSeries& s) {
  const auto problems = validate(s);
  if (problems.empty()) return;
  std::string msg = s.owner.name + ":";
  for (const Violation& v : problems) msg += " [" + v.code + "] " + v.detail + ";";
  throw Error(Errc::Validation, msg);
}

// ------------------------------------------------------------------ probes

Probe probe(const Var& var, const IntVec& cls) { return Probe{{GaussRat(1), var, cls}}; }

Probe operator+(Probe a, const Probe& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Polynomial probe_pairing(const Lattice& lattice, const Probe& alpha, const IntVec& k) {
  Polynomial out;
  for (const ProbeTerm& t : alpha) {
    out += Polynomial::monomial(t.coeff * GaussRat(lattice.pair(k, t.cls)), Monomial::of(t.var));
  }
  return out;
}

Polynomial probe_square(const Lattice& lattice, const Probe& alpha) {
  Polynomial out;
  for (const ProbeTerm& a : alpha) {
    for (const ProbeTerm& b : alpha) {
      const GaussRat c = a.coeff * b.coeff * GaussRat(lattice.pair(a.cls, b.cls));
      out += Polynomial::monomial(c, Monomial::of(a.var) * Monomial::of(b.var));
    }
  }
  return out;
}

// ------------------------------------------------------------- evaluation

namespace {

const GaussRat kHalf = GaussRat::fraction(1, 2);

/// sum a e^{Q/2 + K.alpha} (sign = +1) or sum a e^{-Q/2 + iK.alpha} (sign = -1),
/// restricted to classes accepted by `keep`.
template <class Keep>
ExpElement partial_series(const StructureSeries& s, const Probe& alpha, bool rotated, Keep keep) {
  const Lattice& lat = s.owner.lattice;
  const Polynomial half_q = probe_square(lat, alpha) * Polynomial(kHalf);
  ExpElement out;
  for (const BasicClass& b : s.classes) {
    if (!keep(b)) continue;
    const Polynomial freq = probe_pairing(lat, alpha, b.k);
    const Polynomial expo = rotated ? freq * Polynomial(GaussRat::i()) - half_q : freq + half_q;
    out += ExpElement::exp(expo).scaled(b.coeff);
  }
  return out;
}

bool all_classes(const BasicClass&) { return true; }

}  // namespace

ExpElement dd_eval(const StructureSeries& s, const Probe& alpha) {
  return partial_series(s, alpha, false, all_classes);
}

ExpElement dx_eval(const StructureSeries& s, const Probe& alpha, unsigned x_power) {
  const ManifoldDescriptor& m = s.owner;
  const GaussRat rot = GaussRat::i_pow(-m.d0());
  auto real_sector = [&](const BasicClass& b) { return mod(m.lattice.pair(b.k, m.sigma), 4) == 2; };
  auto rotated_sector = [&](const BasicClass& b) { return mod(m.lattice.pair(b.k, m.sigma), 4) == 0; };
  const ExpElement real = partial_series(s, alpha, false, real_sector);
  const ExpElement rotated = partial_series(s, alpha, true, rotated_sector).scaled(rot);
  // x^2 acts as 4 on simple-type series.
  const GaussRat x_scale = GaussRat(4).pow(static_cast<long>(x_power / 2));
  if (x_power % 2 == 0) return (real + rotated).scaled(x_scale);
  return (real - rotated).scaled(x_scale * GaussRat(2));
}

ExpElement dw_eval(const StructureSeries& s, const Probe& alpha, unsigned x_power) {
  const GaussRat rot = GaussRat::i_pow(-s.owner.d0());
  const ExpElement plain = dd_eval(s, alpha);
  const ExpElement turned = partial_series(s, alpha, true, all_classes).scaled(rot);
  const GaussRat x_scale = GaussRat(4).pow(static_cast<long>(x_power / 2));
  if (x_power % 2 == 0) return (plain + turned).scaled(x_scale * kHalf);
  return (plain - turned).scaled(x_scale);
}

StructureSeries recover_series(const ExpElement& combined, const ManifoldDescriptor& owner,
                               const std::vector<Var>& vars) {
  const Lattice& lat = owner.lattice;
  if (vars.size() != lat.rank()) throw Error(Errc::InvalidArgument, "need one variable per basis vector");
  Probe alpha;
  for (std::size_t k = 0; k < vars.size(); ++k) alpha.push_back({GaussRat(1), vars[k], lat.basis_vector(k)});
  const Polynomial half_q = probe_square(lat, alpha) * Polynomial(kHalf);
  const RatMatrix gram_inv = mat_inv(lat.gram());
  const GaussRat unrotate = GaussRat::i_pow(owner.d0());

  StructureSeries out{owner, {}};
  for (const auto& t : combined.terms()) {
    if (!t.mono.is_one()) throw Error(Errc::InvalidArgument, "term with polynomial factor: " + t.mono.str());
    // Split the exponent into its quadratic part and its linear frequencies.
    Polynomial quad;
    std::vector<GaussRat> freq(vars.size(), GaussRat(0));
    for (const auto& [m, c] : t.expo.terms()) {
      if (m.degree() == 2) {
        quad += Polynomial::monomial(c, m);
        continue;
      }
      const auto it = std::find(vars.begin(), vars.end(), m.powers().front().first);
      if (it == vars.end()) throw Error(Errc::InvalidArgument, "unexpected variable " + m.str());
      freq[static_cast<std::size_t>(it - vars.begin())] = c;
    }
    bool rotated = false;
    if (quad == half_q) {
      rotated = false;
    } else if (quad == -half_q) {
      rotated = true;
    } else {
      throw Error(Errc::InvalidArgument, "exponent does not carry +-Q/2: " + t.expo.str());
    }
    IntVec k(vars.size(), 0);
    for (std::size_t r = 0; r < vars.size(); ++r) {
      GaussRat acc(0);
      for (std::size_t c = 0; c < vars.size(); ++c) {
        const GaussRat f = rotated ? freq[c] / GaussRat::i() : freq[c];
        acc += gram_inv(r, c) * f;
      }
      if (!acc.is_real() || acc.re().get_den() != 1) {
        throw Error(Errc::InvalidArgument, "frequency is not an integral class");
      }
      k[r] = acc.re().get_num().get_si();
    }
    out.classes.push_back({k, rotated ? t.coeff * unrotate : t.coeff, std::nullopt});
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const BasicClass& a, const BasicClass& b) { return a.k < b.k; });
  return out;
}

StructureSeries change_w(const StructureSeries& s, const IntVec& w_new) {
  const Lattice& lat = s.owner.lattice;
  if (mod(lat.pair(w_new, s.owner.sigma), 2) != 1) {
    throw Error(Errc::InvalidArgument, "new w must have odd pairing with Sigma");
  }
  const long w_old_sq = lat.square(s.owner.w);
  const long w_new_sq = lat.square(w_new);
  StructureSeries out = s;
  out.owner.w = w_new;
  for (BasicClass& b : out.classes) {
    const long diff = (lat.pair(b.k, w_new) + w_new_sq) - (lat.pair(b.k, s.owner.w) + w_old_sq);
    if (mod(diff, 2) != 0) {
      throw Error(Errc::NonIntegralSign, "(K.w + w^2)/2 changes by a half-integer for K = " + vec_str(b.k));
    }
    if (mod(diff / 2, 2) == 1) b.coeff = -b.coeff;
  }
  return out;
}

long witten_exponent(long euler, long signature) {
  const long num = 7 * euler + 11 * signature;
  if (mod(num, 4) != 0) throw Error(Errc::BadTopology, "7 chi + 11 sigma is not divisible by 4");
  return 2 + num / 4;
}

GaussRat witten_coefficient(const ManifoldDescriptor& m, const IntVec& k, const GaussRat& sw) {
  const long e = witten_exponent(m.euler, m.signature);
  const long sign_num = m.lattice.pair(k, m.w) + m.lattice.square(m.w);
  if (mod(sign_num, 2) != 0) throw Error(Errc::NonIntegralSign, "K.w + w^2 is odd for K = " + vec_str(k));
  const GaussRat sign = mod(sign_num / 2, 2) == 0 ? GaussRat(1) : GaussRat(-1);
  return sign * GaussRat(2).pow(e) * sw;
}

ComposedTopology topology_compose(const ManifoldDescriptor& m1, const ManifoldDescriptor& m2) {
  if (m1.genus != m2.genus) {
    throw Error(Errc::GenusMismatch, "genus " + std::to_string(m1.genus) + " vs " + std::to_string(m2.genus));
  }
  const long g = m1.genus;
  ComposedTopology t;
  t.genus = g;
  t.euler = m1.euler + m2.euler + 4 * g - 4;
  t.signature = m1.signature + m2.signature;
  t.b_plus = m1.b_plus + m2.b_plus + 2 * g - 1;
  t.d0_parity = mod(m1.d0() + m2.d0() + 3 * (g - 1), 2);
  return t;
}

bool simple_type_shape(const ExpElement& e, const Var& var) {
  bool shaped = true;
  for (const auto& t : e.terms()) {
    t.expo.split_linear(var);
    if (t.mono.power(var) > 0) shaped = false;
  }
  return shaped;
}

}  // namespace donsum
