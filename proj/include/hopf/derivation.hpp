#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/hopf.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Hopf derivations in (delta, d) coordinates
//
// A derivation-and-coderivation psi of H = U(L) x| K[G] is determined by
// psi(x) = delta(x) for x in L and psi(g) = d(g) g for g in G, where the
// value on a grouplike must be a (g,g)-primitive, i.e. of the form v g with
// v in L.
// ---------------------------------------------------------------------------

struct HopfDerivation {
  QMatrix delta;           // L -> L
  std::vector<QVector> d;  // one L-vector per group label

  bool operator==(const HopfDerivation& o) const { return delta == o.delta && d == o.d; }

  static HopfDerivation zero(const CgkmmHopf& h) {
    return HopfDerivation{QMatrix(h.lie.dim, h.lie.dim),
                          std::vector<QVector>(h.group.order, qvec_zero(h.lie.dim))};
  }
};

inline HopfDerivation derivation_add(const HopfDerivation& a, const HopfDerivation& b,
                                     const Rat& scale = Rat(1)) {
  HopfDerivation r = a;
  r.delta = r.delta + b.delta.scaled(scale);
  for (std::size_t g = 0; g < r.d.size(); ++g) r.d[g] = qvec_add(r.d[g], qvec_scale(scale, b.d[g]));
  return r;
}

inline HopfDerivation derivation_scaled(const HopfDerivation& a, const Rat& scale) {
  HopfDerivation r = a;
  r.delta = r.delta.scaled(scale);
  for (auto& v : r.d) v = qvec_scale(scale, v);
  return r;
}

/// The three coordinate constraints: delta a Lie derivation, d a tau-twisted
/// 1-cocycle, and the conjugation compatibility
/// delta(tau(g)x) - tau(g)delta(x) = [tau(g)x, d(g)].
inline std::optional<std::string> hopf_derivation_witness(const CgkmmHopf& h, const HopfDerivation& der) {
  if (static_cast<int>(der.d.size()) != h.group.order) return "cocycle part has wrong domain";
  for (const auto& v : der.d)
    if (static_cast<int>(v.size()) != h.lie.dim) return "cocycle value has wrong dimension";
  if (auto w = derivation_witness(h.lie, der.delta)) return "delta: " + *w;
  if (!qvec_is_zero(der.d[0])) return "d(identity) must vanish";
  for (int g = 0; g < h.group.order; ++g)
    for (int k = 0; k < h.group.order; ++k) {
      QVector lhs = der.d[h.group.op(g, k)];
      QVector rhs = qvec_add(der.d[g], h.tau_of(g) * der.d[k]);
      if (!(lhs == rhs))
        return "cocycle identity fails at (" + h.group.name(g) + "," + h.group.name(k) + ")";
    }
  for (int g = 0; g < h.group.order; ++g)
    for (int i = 0; i < h.lie.dim; ++i) {
      QVector tx = h.tau_of(g) * qvec_unit(h.lie.dim, i);
      QVector lhs = qvec_sub(der.delta * tx, h.tau_of(g) * der.delta.col(i));
      QVector rhs = h.lie.bracket(tx, der.d[g]);
      if (!(lhs == rhs))
        return "twisted equivariance fails at (g=" + h.group.name(g) + ", x=" + h.lie.name(i) + ")";
    }
  return std::nullopt;
}

/// Leibniz extension of (delta, d) to the PBW basis.
inline HopfElement apply_derivation(const CgkmmHopf& h, const HopfDerivation& der, const HopfElement& u) {
  HopfElement out;
  for (const auto& [b, c] : u) {
    const std::vector<int> word = monomial_word(b.first);
    // sum over positions: prefix * delta(letter) * suffix
    for (std::size_t j = 0; j < word.size(); ++j) {
      UEnvElement acc = uenv_one(h.lie.dim);
      for (std::size_t t = 0; t < word.size(); ++t) {
        if (t == j)
          acc = uenv_mul_linear(h.lie, acc, der.delta.col(word[t]));
        else
          acc = uenv_mul_letter(h.lie, acc, word[t]);
      }
      he_add(out, he_from_uenv(acc, b.second), c);
    }
    // monomial * d(g) * g
    const QVector& dg = der.d[b.second];
    if (!qvec_is_zero(dg)) {
      UEnvElement m;
      m.emplace(b.first, Rat(1));
      he_add(out, he_from_uenv(uenv_mul_linear(h.lie, m, dg), b.second), c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hopf automorphisms as (alpha, beta) pairs
// ---------------------------------------------------------------------------

struct HopfAutomorphism {
  QMatrix alpha;  // Lie automorphism
  GroupAut beta;

  bool operator==(const HopfAutomorphism& o) const { return alpha == o.alpha && beta == o.beta; }
  bool operator<(const HopfAutomorphism& o) const {
    if (alpha < o.alpha) return true;
    if (o.alpha < alpha) return false;
    return beta < o.beta;
  }

  static HopfAutomorphism identity(const CgkmmHopf& h) {
    return HopfAutomorphism{QMatrix::identity(h.lie.dim), GroupAut{Permutation::identity(h.group.order)}};
  }
};

inline std::optional<std::string> hopf_automorphism_witness(const CgkmmHopf& h, const QMatrix& alpha,
                                                            const GroupAut& beta) {
  if (auto w = automorphism_witness(h.group, beta.perm)) return "group part: " + *w;
  if (alpha.rows() != static_cast<std::size_t>(h.lie.dim) ||
      alpha.cols() != static_cast<std::size_t>(h.lie.dim))
    return "Lie part has wrong shape";
  if (!inverse(alpha)) return "Lie part is singular";
  if (auto w = lie_hom_witness(h.lie, h.lie, alpha)) return "Lie part: " + *w;
  for (int g = 0; g < h.group.order; ++g)
    if (!(alpha * h.tau_of(g) == h.tau_of(beta.apply(g)) * alpha))
      return "equivariance fails at g=" + h.group.name(g);
  return std::nullopt;
}

inline bool aut_membership(const CgkmmHopf& h, const QMatrix& alpha, const GroupAut& beta) {
  return !hopf_automorphism_witness(h, alpha, beta).has_value();
}

inline HopfAutomorphism aut_make(const CgkmmHopf& h, QMatrix alpha, GroupAut beta) {
  if (auto w = hopf_automorphism_witness(h, alpha, beta))
    throw input_error("not a Hopf automorphism: " + *w);
  return HopfAutomorphism{std::move(alpha), std::move(beta)};
}

inline HopfAutomorphism aut_compose(const HopfAutomorphism& a, const HopfAutomorphism& b) {
  return HopfAutomorphism{a.alpha * b.alpha, a.beta.compose(b.beta)};
}

inline HopfAutomorphism aut_invert(const HopfAutomorphism& a) {
  auto inv = inverse(a.alpha);
  if (!inv) throw internal_error("automorphism Lie part not invertible");
  return HopfAutomorphism{*inv, a.beta.inverse()};
}

inline HopfElement apply_automorphism(const CgkmmHopf& h, const HopfAutomorphism& aut,
                                      const HopfElement& u) {
  HopfElement out;
  for (const auto& [b, c] : u) {
    UEnvElement m;
    m.emplace(b.first, Rat(1));
    UEnvElement img = uenv_apply_linear(h.lie, h.lie, aut.alpha, m);
    he_add(out, he_from_uenv(img, aut.beta.apply(b.second)), c);
  }
  return out;
}

/// phi . psi = phi o psi o phi^{-1} in coordinates:
/// delta' = alpha delta alpha^{-1}, d'(g) = alpha d(beta^{-1}(g)).
inline HopfDerivation conjugate_derivation(const CgkmmHopf& h, const HopfAutomorphism& phi,
                                           const HopfDerivation& psi) {
  auto ainv = inverse(phi.alpha);
  if (!ainv) throw internal_error("automorphism Lie part not invertible");
  HopfDerivation out;
  out.delta = phi.alpha * psi.delta * *ainv;
  GroupAut binv = phi.beta.inverse();
  out.d.resize(h.group.order);
  for (int g = 0; g < h.group.order; ++g) out.d[g] = phi.alpha * psi.d[binv.apply(g)];
  return out;
}

/// Extracts v from an element of the form v g (a (g,g)-primitive); nullopt
/// if other terms occur.
inline std::optional<QVector> extract_primitive_at(const CgkmmHopf& h, const HopfElement& u, int g) {
  QVector v(h.lie.dim, Rat(0));
  for (const auto& [b, c] : u) {
    if (b.second != g || monomial_degree(b.first) != 1) return std::nullopt;
    for (int i = 0; i < h.lie.dim; ++i)
      if (b.first[i] == 1) v[i] = c;
  }
  return v;
}

/// [psi1, psi2] = psi1 o psi2 - psi2 o psi1, computed by composing the
/// induced endomorphisms on generators and re-extracting coordinates.
inline HopfDerivation derivation_bracket(const CgkmmHopf& h, const HopfDerivation& a,
                                         const HopfDerivation& b) {
  HopfDerivation out = HopfDerivation::zero(h);
  for (int i = 0; i < h.lie.dim; ++i) {
    HopfElement x = he_primitive(h, i);
    HopfElement lhs = apply_derivation(h, a, apply_derivation(h, b, x));
    he_add(lhs, apply_derivation(h, b, apply_derivation(h, a, x)), Rat(-1));
    auto v = extract_primitive_at(h, lhs, 0);
    if (!v) throw internal_error("derivation bracket left the primitive space");
    for (int k = 0; k < h.lie.dim; ++k) out.delta.at(k, i) = (*v)[k];
  }
  for (int g = 0; g < h.group.order; ++g) {
    HopfElement eg = he_grouplike(h, g);
    HopfElement lhs = apply_derivation(h, a, apply_derivation(h, b, eg));
    he_add(lhs, apply_derivation(h, b, apply_derivation(h, a, eg)), Rat(-1));
    auto v = extract_primitive_at(h, lhs, g);
    if (!v) throw internal_error("derivation bracket is not grouplike-primitive");
    out.d[g] = *v;
  }
  if (auto w = hopf_derivation_witness(h, out))
    throw internal_error("derivation bracket violates the coordinate constraints: " + *w);
  return out;
}

/// Independent degree-d certification of the induced endomorphism: the
/// Leibniz rule on basis pairs and the co-Leibniz rule on basis elements,
/// plus psi(1) = 0 and eps o psi = 0.
inline VerifyResult certify_derivation(const CgkmmHopf& h, const HopfDerivation& der, int d) {
  std::vector<BasisElem> basis = enumerate_basis(h, d);
  if (!apply_derivation(h, der, he_unit(h)).empty())
    return VerifyResult::fail("psi(1) = 0", "unit");
  for (const auto& bb : basis) {
    HopfElement e = he_basis(h, bb.first, bb.second);
    HopfElement pe = apply_derivation(h, der, e);
    if (hopf_counit(h, pe) != 0) return VerifyResult::fail("eps o psi = 0", basis_to_string(h, bb));
    // co-Leibniz
    Tensor2 lhs = hopf_coproduct(h, pe);
    Tensor2 rhs;
    for (const auto& [p, c] : hopf_coproduct(h, e)) {
      HopfElement l = apply_derivation(h, der, he_basis(h, p.first.first, p.first.second));
      for (const auto& [t, tc] : l) t2_add_term(rhs, t, p.second, c * tc);
      HopfElement r = apply_derivation(h, der, he_basis(h, p.second.first, p.second.second));
      for (const auto& [t, tc] : r) t2_add_term(rhs, p.first, t, c * tc);
    }
    if (lhs != rhs) return VerifyResult::fail("co-Leibniz", basis_to_string(h, bb));
  }
  for (const auto& ba : basis)
    for (const auto& bb : basis) {
      HopfElement u = he_basis(h, ba.first, ba.second);
      HopfElement v = he_basis(h, bb.first, bb.second);
      HopfElement lhs = apply_derivation(h, der, hopf_mul(h, u, v));
      HopfElement rhs = hopf_mul(h, apply_derivation(h, der, u), v);
      he_add(rhs, hopf_mul(h, u, apply_derivation(h, der, v)));
      if (lhs != rhs)
        return VerifyResult::fail("Leibniz", basis_to_string(h, ba) + ", " + basis_to_string(h, bb));
    }
  return VerifyResult::pass();
}

}  // namespace hopf
