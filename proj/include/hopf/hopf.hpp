#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopf/error.hpp"
#include "hopf/group.hpp"
#include "hopf/lie.hpp"
#include "hopf/pbw.hpp"
#include "hopf/verify.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// The CGKMM presentation: a cocommutative Hopf algebra is U(L) x| K[G] for
// the group G of grouplikes acting on the Lie algebra L of primitives.
// ---------------------------------------------------------------------------

class CgkmmCache;

struct CgkmmHopf {
  GroupTable group;
  LieAlgebra lie;
  LinearRep tau;  // G -> Aut_Lie(L); tau(g) x = g x g^{-1}

  const QMatrix& tau_of(int g) const { return tau.mats[g]; }

  bool operator==(const CgkmmHopf& o) const {
    return group == o.group && lie == o.lie && tau == o.tau;
  }
  bool operator!=(const CgkmmHopf& o) const { return !(*this == o); }

  mutable std::shared_ptr<CgkmmCache> cache;
};

inline std::optional<std::string> lie_witness(const LieAlgebra& l) {
  for (int i = 0; i < l.dim; ++i)
    for (int j = 0; j < l.dim; ++j)
      if (!(l.basis_bracket(i, j) == qvec_scale(Rat(-1), l.basis_bracket(j, i))))
        return "antisymmetry fails at (" + l.name(i) + "," + l.name(j) + ")";
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j)
      for (int k = j + 1; k < l.dim; ++k) {
        QVector s = l.bracket(l.basis_bracket(i, j), qvec_unit(l.dim, k));
        s = qvec_add(s, l.bracket(l.basis_bracket(j, k), qvec_unit(l.dim, i)));
        s = qvec_add(s, l.bracket(l.basis_bracket(k, i), qvec_unit(l.dim, j)));
        if (!qvec_is_zero(s))
          return "Jacobi fails at (" + l.name(i) + "," + l.name(j) + "," + l.name(k) + ")";
      }
  return std::nullopt;
}

inline std::optional<std::string> cgkmm_witness(const CgkmmHopf& h) {
  if (auto w = validate_group(h.group)) return "group: " + *w;
  if (auto w = lie_witness(h.lie)) return "lie: " + *w;
  if (h.tau.dim != h.lie.dim) return "tau dimension mismatch";
  if (auto w = linear_rep_witness(h.group, h.tau)) return "tau: " + *w;
  for (int g = 0; g < h.group.order; ++g)
    if (auto w = lie_hom_witness(h.lie, h.lie, h.tau.mats[g]))
      return "tau(" + h.group.name(g) + ") is not a Lie automorphism: " + *w;
  return std::nullopt;
}

inline CgkmmHopf make_cgkmm(GroupTable g, LieAlgebra l, LinearRep tau) {
  CgkmmHopf h{std::move(g), std::move(l), std::move(tau)};
  if (auto w = cgkmm_witness(h)) throw input_error("invalid Hopf data: " + *w);
  return h;
}

/// Test hook: skips validation so corrupted coordinates can be probed.
inline CgkmmHopf make_cgkmm_unchecked(GroupTable g, LieAlgebra l, LinearRep tau) {
  return CgkmmHopf{std::move(g), std::move(l), std::move(tau)};
}

inline CgkmmHopf k_of_group(GroupTable g) {
  int n = g.order;
  return make_cgkmm(std::move(g), LieAlgebra::zero(), LinearRep::trivial(n, 0));
}

inline CgkmmHopf u_of_lie(LieAlgebra l) {
  int d = l.dim;
  return make_cgkmm(GroupTable::trivial(), std::move(l), LinearRep::trivial(1, d));
}

inline CgkmmHopf trivial_hopf() { return k_of_group(GroupTable::trivial()); }

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// Basis pair: PBW monomial over L paired with a group label.
using BasisElem = std::pair<Monomial, int>;

struct BasisCmp {
  bool operator()(const BasisElem& a, const BasisElem& b) const {
    GradedLex gl;
    if (gl(a.first, b.first)) return true;
    if (gl(b.first, a.first)) return false;
    return a.second < b.second;
  }
};

/// Exact element of U(L) x| K[G]; no zero coefficients stored.
using HopfElement = std::map<BasisElem, Rat, BasisCmp>;

struct Tensor2Cmp {
  bool operator()(const std::pair<BasisElem, BasisElem>& a,
                  const std::pair<BasisElem, BasisElem>& b) const {
    BasisCmp c;
    if (c(a.first, b.first)) return true;
    if (c(b.first, a.first)) return false;
    return c(a.second, b.second);
  }
};

using Tensor2 = std::map<std::pair<BasisElem, BasisElem>, Rat, Tensor2Cmp>;

struct Tensor3Cmp {
  bool operator()(const std::tuple<BasisElem, BasisElem, BasisElem>& a,
                  const std::tuple<BasisElem, BasisElem, BasisElem>& b) const {
    BasisCmp c;
    if (c(std::get<0>(a), std::get<0>(b))) return true;
    if (c(std::get<0>(b), std::get<0>(a))) return false;
    if (c(std::get<1>(a), std::get<1>(b))) return true;
    if (c(std::get<1>(b), std::get<1>(a))) return false;
    return c(std::get<2>(a), std::get<2>(b));
  }
};

using Tensor3 = std::map<std::tuple<BasisElem, BasisElem, BasisElem>, Rat, Tensor3Cmp>;

inline void he_add_term(HopfElement& e, const BasisElem& b, const Rat& c) {
  if (c == 0) return;
  auto it = e.find(b);
  if (it == e.end()) {
    e.emplace(b, c);
  } else {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

inline void he_add(HopfElement& acc, const HopfElement& e, const Rat& scale = Rat(1)) {
  for (const auto& [b, c] : e) he_add_term(acc, b, scale * c);
}

inline HopfElement he_scaled(const HopfElement& e, const Rat& scale) {
  HopfElement r;
  he_add(r, e, scale);
  return r;
}

inline HopfElement he_basis(const CgkmmHopf& h, const Monomial& m, int g) {
  HopfElement e;
  e.emplace(BasisElem{m, g}, Rat(1));
  return e;
}

inline HopfElement he_unit(const CgkmmHopf& h) { return he_basis(h, Monomial(h.lie.dim, 0), 0); }

inline HopfElement he_grouplike(const CgkmmHopf& h, int g) { return he_basis(h, Monomial(h.lie.dim, 0), g); }

inline HopfElement he_primitive(const CgkmmHopf& h, int letter) {
  Monomial m(h.lie.dim, 0);
  m[letter] = 1;
  return he_basis(h, m, 0);
}

inline HopfElement he_from_uenv(const UEnvElement& u, int g) {
  HopfElement e;
  for (const auto& [m, c] : u) e.emplace(BasisElem{m, g}, c);
  return e;
}

/// L-vector as a primitive element of H (group part = identity).
inline HopfElement he_from_vector(const CgkmmHopf& h, const QVector& x) {
  HopfElement e;
  for (int i = 0; i < h.lie.dim; ++i)
    if (x[i] != 0) {
      Monomial m(h.lie.dim, 0);
      m[i] = 1;
      he_add_term(e, {m, 0}, x[i]);
    }
  return e;
}

inline void t2_add_term(Tensor2& t, const BasisElem& a, const BasisElem& b, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(a, b);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

inline void t3_add_term(Tensor3& t, const BasisElem& a, const BasisElem& b, const BasisElem& c,
                        const Rat& coef) {
  if (coef == 0) return;
  auto key = std::make_tuple(a, b, c);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, coef);
  } else {
    it->second += coef;
    if (it->second == 0) t.erase(it);
  }
}

// ---------------------------------------------------------------------------
// Structure maps
// ---------------------------------------------------------------------------

inline Rat rat_binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

/// Per-algebra operation caches. Inserts are idempotent; sharing between
/// copies of the same algebra is harmless.
class CgkmmCache {
 public:
  using MonSplits = std::vector<std::tuple<Monomial, Monomial, Rat>>;

  const MonSplits& coproduct_splits(const Monomial& m) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = splits_.find(m);
    if (it != splits_.end()) return it->second;
    MonSplits s;
    int n = static_cast<int>(m.size());
    Monomial k(n, 0);
    std::function<void(int, Rat)> rec = [&](int pos, Rat coef) {
      if (pos == n) {
        Monomial rest(n, 0);
        for (int i = 0; i < n; ++i) rest[i] = m[i] - k[i];
        s.emplace_back(k, rest, coef);
        return;
      }
      for (int a = 0; a <= m[pos]; ++a) {
        k[pos] = a;
        rec(pos + 1, coef * rat_binomial(m[pos], a));
      }
      k[pos] = 0;
    };
    rec(0, Rat(1));
    return splits_.emplace(m, std::move(s)).first->second;
  }

  std::optional<UEnvElement> find_tau(int g, const Monomial& m) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tau_.find({g, m});
    if (it == tau_.end()) return std::nullopt;
    return it->second;
  }
  void store_tau(int g, const Monomial& m, const UEnvElement& v) {
    std::lock_guard<std::mutex> lock(mu_);
    tau_.emplace(std::make_pair(g, m), v);
  }

  std::optional<HopfElement> find_mul(const BasisElem& a, const BasisElem& b) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mul_.find({a, b});
    if (it == mul_.end()) return std::nullopt;
    return it->second;
  }
  void store_mul(const BasisElem& a, const BasisElem& b, const HopfElement& v) {
    std::lock_guard<std::mutex> lock(mu_);
    mul_.emplace(std::make_pair(a, b), v);
  }

 private:
  std::map<Monomial, MonSplits> splits_;
  std::map<std::pair<int, Monomial>, UEnvElement> tau_;
  std::map<std::pair<BasisElem, BasisElem>, HopfElement, Tensor2Cmp> mul_;
  std::mutex mu_;
};

inline CgkmmCache& cache_of(const CgkmmHopf& h) {
  if (!h.cache) h.cache = std::make_shared<CgkmmCache>();
  return *h.cache;
}

/// tau(g) extended to U(L) as an algebra automorphism.
inline UEnvElement hopf_tau_apply(const CgkmmHopf& h, int g, const Monomial& m) {
  if (g == 0 || monomial_degree(m) == 0) {
    UEnvElement e;
    e.emplace(m, Rat(1));
    return e;
  }
  CgkmmCache& cache = cache_of(h);
  if (auto hit = cache.find_tau(g, m)) return *hit;
  UEnvElement acc = uenv_one(h.lie.dim);
  for (int letter : monomial_word(m)) acc = uenv_mul_linear(h.lie, acc, h.tau_of(g).col(letter));
  cache.store_tau(g, m, acc);
  return acc;
}

/// (x (x) g)(x' (x) g') = x tau(g)(x') (x) gg'.
inline HopfElement hopf_mul_basis(const CgkmmHopf& h, const BasisElem& a, const BasisElem& b) {
  CgkmmCache& cache = cache_of(h);
  if (auto hit = cache.find_mul(a, b)) return *hit;
  UEnvElement moved = hopf_tau_apply(h, a.second, b.first);
  UEnvElement left;
  left.emplace(a.first, Rat(1));
  UEnvElement prod = uenv_mul(h.lie, left, moved);
  HopfElement out = he_from_uenv(prod, h.group.op(a.second, b.second));
  cache.store_mul(a, b, out);
  return out;
}

inline HopfElement hopf_mul(const CgkmmHopf& h, const HopfElement& u, const HopfElement& v) {
  HopfElement out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) he_add(out, hopf_mul_basis(h, a, b), ca * cb);
  return out;
}

inline Tensor2 hopf_coproduct(const CgkmmHopf& h, const HopfElement& u) {
  Tensor2 out;
  CgkmmCache& cache = cache_of(h);
  for (const auto& [b, c] : u) {
    for (const auto& [m1, m2, coef] : cache.coproduct_splits(b.first))
      t2_add_term(out, {m1, b.second}, {m2, b.second}, c * coef);
  }
  return out;
}

inline Rat hopf_counit(const CgkmmHopf& h, const HopfElement& u) {
  Rat r(0);
  for (const auto& [b, c] : u)
    if (monomial_degree(b.first) == 0) r += c;
  return r;
}

/// S(x (x) g) = tau(g^{-1})(S_U(x)) (x) g^{-1}.
inline HopfElement hopf_antipode(const CgkmmHopf& h, const HopfElement& u) {
  HopfElement out;
  for (const auto& [b, c] : u) {
    int gi = h.group.inv[b.second];
    UEnvElement s = uenv_antipode_monomial(h.lie, b.first);
    UEnvElement moved;
    for (const auto& [m, cm] : s) uenv_add(moved, hopf_tau_apply(h, gi, m), cm);
    he_add(out, he_from_uenv(moved, gi), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor helpers
// ---------------------------------------------------------------------------

inline Tensor2 t2_mul(const CgkmmHopf& h, const Tensor2& a, const Tensor2& b) {
  Tensor2 out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      HopfElement left = hopf_mul_basis(h, pa.first, pb.first);
      HopfElement right = hopf_mul_basis(h, pa.second, pb.second);
      Rat c = ca * cb;
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) t2_add_term(out, l, r, c * cl * cr);
    }
  return out;
}

inline Tensor2 t2_swap(const Tensor2& t) {
  Tensor2 out;
  for (const auto& [p, c] : t) t2_add_term(out, p.second, p.first, c);
  return out;
}

inline Tensor2 t2_of(const HopfElement& u, const HopfElement& v) {
  Tensor2 out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) t2_add_term(out, a, b, ca * cb);
  return out;
}

// ---------------------------------------------------------------------------
// Basis enumeration and coordinates
// ---------------------------------------------------------------------------

inline std::vector<BasisElem> enumerate_basis(const CgkmmHopf& h, int max_degree) {
  std::vector<BasisElem> out;
  for (const auto& m : enumerate_monomials(h.lie.dim, max_degree))
    for (int g = 0; g < h.group.order; ++g) out.push_back({m, g});
  return out;
}

struct BasisIndex {
  std::map<BasisElem, int, BasisCmp> index;
  std::vector<BasisElem> elems;
  int degree = 0;

  explicit BasisIndex(const CgkmmHopf& h, int max_degree) : degree(max_degree) {
    elems = enumerate_basis(h, max_degree);
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  }

  std::size_t size() const { return elems.size(); }

  /// Coefficient vector; nullopt if the element leaves the truncation.
  std::optional<QVector> coords(const HopfElement& u) const {
    QVector v(elems.size(), Rat(0));
    for (const auto& [b, c] : u) {
      auto it = index.find(b);
      if (it == index.end()) return std::nullopt;
      v[it->second] = c;
    }
    return v;
  }

  HopfElement element(const QVector& v) const {
    HopfElement e;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (v[i] != 0) he_add_term(e, elems[i], v[i]);
    return e;
  }
};

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

inline std::string basis_to_string(const CgkmmHopf& h, const BasisElem& b) {
  return monomial_to_string(h.lie, b.first) + "(x)" + h.group.name(b.second);
}

inline std::string element_to_string(const CgkmmHopf& h, const HopfElement& u) {
  if (u.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : u) {
    if (!first) os << " + ";
    if (!(c == 1)) os << rat_str(c) << "*";
    os << basis_to_string(h, b);
    first = false;
  }
  return os.str();
}

inline std::string tensor2_to_string(const CgkmmHopf& h, const Tensor2& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : t) {
    if (!first) os << " + ";
    if (!(c == 1)) os << rat_str(c) << "*";
    os << basis_to_string(h, p.first) << " @ " << basis_to_string(h, p.second);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

/// Exhaustive exact check of the algebra, coalgebra, bialgebra, antipode and
/// cocommutativity laws on all basis elements of PBW degree <= d (pairwise
/// laws quantify over pairs of such elements; associativity over triples of
/// total degree <= d). Stops at the first failing witness.
inline VerifyResult verify_hopf_axioms(const CgkmmHopf& h, int d) {
  if (d < 1) throw input_error("degree bound must be >= 1");
  std::vector<BasisElem> basis = enumerate_basis(h, d);

  // unit
  HopfElement one = he_unit(h);
  for (const auto& b : basis) {
    HopfElement e = he_basis(h, b.first, b.second);
    if (hopf_mul(h, one, e) != e || hopf_mul(h, e, one) != e)
      return VerifyResult::fail("unit", basis_to_string(h, b));
  }

  // associativity on triples of bounded total degree
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (monomial_degree(a.first) + monomial_degree(b.first) > d) continue;
      for (const auto& c : basis) {
        if (monomial_degree(a.first) + monomial_degree(b.first) + monomial_degree(c.first) > d)
          continue;
        HopfElement ea = he_basis(h, a.first, a.second);
        HopfElement eb = he_basis(h, b.first, b.second);
        HopfElement ec = he_basis(h, c.first, c.second);
        if (hopf_mul(h, hopf_mul(h, ea, eb), ec) != hopf_mul(h, ea, hopf_mul(h, eb, ec)))
          return VerifyResult::fail("associativity", basis_to_string(h, a) + ", " +
                                                         basis_to_string(h, b) + ", " +
                                                         basis_to_string(h, c));
      }
    }

  // coassociativity, counit, cocommutativity, antipode identity
  for (const auto& b : basis) {
    HopfElement e = he_basis(h, b.first, b.second);
    Tensor2 delta = hopf_coproduct(h, e);

    Tensor3 left, right;
    for (const auto& [p, c] : delta) {
      Tensor2 inner = hopf_coproduct(h, he_basis(h, p.first.first, p.first.second));
      for (const auto& [q, cq] : inner) t3_add_term(left, q.first, q.second, p.second, c * cq);
      Tensor2 inner2 = hopf_coproduct(h, he_basis(h, p.second.first, p.second.second));
      for (const auto& [q, cq] : inner2) t3_add_term(right, p.first, q.first, q.second, c * cq);
    }
    if (left != right) return VerifyResult::fail("coassociativity", basis_to_string(h, b));

    HopfElement eps_id, id_eps;
    for (const auto& [p, c] : delta) {
      if (monomial_degree(p.first.first) == 0) he_add_term(eps_id, p.second, c);
      if (monomial_degree(p.second.first) == 0) he_add_term(id_eps, p.first, c);
    }
    if (eps_id != e || id_eps != e) return VerifyResult::fail("counit", basis_to_string(h, b));

    if (t2_swap(delta) != delta) return VerifyResult::fail("cocommutativity", basis_to_string(h, b));

    HopfElement s_conv, conv_s;
    for (const auto& [p, c] : delta) {
      HopfElement s1 = hopf_antipode(h, he_basis(h, p.first.first, p.first.second));
      he_add(s_conv, hopf_mul(h, s1, he_basis(h, p.second.first, p.second.second)), c);
      HopfElement s2 = hopf_antipode(h, he_basis(h, p.second.first, p.second.second));
      he_add(conv_s, hopf_mul(h, he_basis(h, p.first.first, p.first.second), s2), c);
    }
    HopfElement expected = he_scaled(one, hopf_counit(h, e));
    if (s_conv != expected || conv_s != expected)
      return VerifyResult::fail("antipode identity", basis_to_string(h, b));
  }

  // Delta and epsilon are algebra maps
  for (const auto& a : basis)
    for (const auto& b : basis) {
      HopfElement ea = he_basis(h, a.first, a.second);
      HopfElement eb = he_basis(h, b.first, b.second);
      HopfElement prod = hopf_mul(h, ea, eb);
      if (hopf_counit(h, prod) != hopf_counit(h, ea) * hopf_counit(h, eb))
        return VerifyResult::fail("counit multiplicativity",
                                  basis_to_string(h, a) + ", " + basis_to_string(h, b));
      Tensor2 lhs = hopf_coproduct(h, prod);
      Tensor2 rhs = t2_mul(h, hopf_coproduct(h, ea), hopf_coproduct(h, eb));
      if (lhs != rhs)
        return VerifyResult::fail("coproduct multiplicativity",
                                  basis_to_string(h, a) + ", " + basis_to_string(h, b));
    }

  return VerifyResult::pass();
}

}  // namespace hopf
