#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/action.hpp"
#include "hopf/derivation.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Der_Hopf(H) as a solved linear system in (delta, d) coordinates
// ---------------------------------------------------------------------------

namespace detail {

inline QVector flatten_derivation(const CgkmmHopf& h, const HopfDerivation& der) {
  int n = h.lie.dim;
  QVector v;
  v.reserve(n * n + h.group.order * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) v.push_back(der.delta.at(r, c));
  for (int g = 0; g < h.group.order; ++g)
    for (int i = 0; i < n; ++i) v.push_back(der.d[g][i]);
  return v;
}

inline HopfDerivation unflatten_derivation(const CgkmmHopf& h, const QVector& v) {
  int n = h.lie.dim;
  HopfDerivation der = HopfDerivation::zero(h);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) der.delta.at(r, c) = v[r * n + c];
  for (int g = 0; g < h.group.order; ++g)
    for (int i = 0; i < n; ++i) der.d[g][i] = v[n * n + g * n + i];
  return der;
}

}  // namespace detail

/// Canonical basis of Der_Hopf(H): reduced echelon over the flattening
/// (delta row-major, then the cocycle values in group-label order). Each
/// basis element is certified against the induced endomorphism at degree
/// <= certify_degree; failure there signals an implementation bug and
/// aborts.
inline std::vector<HopfDerivation> hopf_derivations(const CgkmmHopf& h, int certify_degree = 3) {
  int n = h.lie.dim;
  int go = h.group.order;
  int vars = n * n + go * n;
  if (vars == 0) return {};
  std::vector<QVector> rows;
  // (i) delta is a Lie derivation
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector row(vars, Rat(0));
        const QVector& cij = h.lie.basis_bracket(i, j);
        for (int a = 0; a < n; ++a) {
          if (cij[a] != 0) row[k * n + a] += cij[a];
          row[a * n + i] -= h.lie.basis_bracket(a, j)[k];
          row[a * n + j] -= h.lie.basis_bracket(i, a)[k];
        }
        if (!qvec_is_zero(row)) rows.push_back(row);
      }
  // (ii) d is a tau-twisted cocycle
  auto dvar = [&](int g, int i) { return n * n + g * n + i; };
  for (int g = 0; g < go; ++g)
    for (int k = 0; k < go; ++k)
      for (int i = 0; i < n; ++i) {
        QVector row(vars, Rat(0));
        row[dvar(h.group.op(g, k), i)] += 1;
        row[dvar(g, i)] -= 1;
        for (int j = 0; j < n; ++j)
          if (h.tau_of(g).at(i, j) != 0) row[dvar(k, j)] -= h.tau_of(g).at(i, j);
        if (!qvec_is_zero(row)) rows.push_back(row);
      }
  // (iii) delta(tau(g)x) - tau(g)delta(x) = [tau(g)x, d(g)]
  for (int g = 0; g < go; ++g)
    for (int i = 0; i < n; ++i) {
      QVector tx = h.tau_of(g) * qvec_unit(n, i);
      for (int k = 0; k < n; ++k) {
        QVector row(vars, Rat(0));
        for (int a = 0; a < n; ++a) {
          if (tx[a] != 0) row[k * n + a] += tx[a];                 // delta(tau(g)x)_k
          row[a * n + i] -= h.tau_of(g).at(k, a);                  // -(tau(g) delta x)_k
          // -[tau(g)x, d(g)]_k: coefficient of d(g)_v is sum_u tx_u c^k_{uv}
        }
        for (int v = 0; v < n; ++v) {
          Rat coef(0);
          for (int u = 0; u < n; ++u)
            if (tx[u] != 0) coef += tx[u] * h.lie.basis_bracket(u, v)[k];
          row[dvar(g, v)] -= coef;
        }
        if (!qvec_is_zero(row)) rows.push_back(row);
      }
    }
  std::vector<QVector> basis =
      rows.empty() ? Subspace::full(vars).basis() : nullspace(QMatrix::from_rows(rows, vars));
  std::vector<HopfDerivation> out;
  for (const auto& v : basis) {
    HopfDerivation der = detail::unflatten_derivation(h, v);
    if (auto w = hopf_derivation_witness(h, der))
      throw internal_error("derivation solver produced an invalid solution: " + *w);
    VerifyResult cert = certify_derivation(h, der, certify_degree);
    if (!cert.ok)
      throw internal_error("derivation certification failed (" + cert.check + " at " + cert.witness + ")");
    out.push_back(der);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The classifier [H] = U(Der_Hopf(H)) x| K[Aut_Hopf(H)]
// ---------------------------------------------------------------------------

struct Classifier {
  CgkmmHopf h;
  std::vector<HopfDerivation> der_basis;
  /// Aut_Hopf(H) is kept as a computable group (membership, compose,
  /// invert); it is enumerated, and [H] materialized, only when L = 0.
  bool enumerable = false;
  std::vector<HopfAutomorphism> auts;  // when enumerable; identity first
  GroupTable aut_table;                // when enumerable
  std::optional<CgkmmHopf> materialized;
};

inline Classifier build_classifier(const CgkmmHopf& h, int aut_order_bound = 512,
                                   int certify_degree = 3) {
  Classifier cls;
  cls.h = h;
  cls.der_basis = hopf_derivations(h, certify_degree);
  if (h.lie.dim == 0) {
    cls.enumerable = true;
    std::vector<GroupAut> raw = enumerate_automorphisms(h.group, aut_order_bound);
    std::sort(raw.begin(), raw.end());
    std::vector<GroupAut> ordered;
    for (const auto& f : raw)
      if (f.perm.is_identity()) ordered.push_back(f);
    for (const auto& f : raw)
      if (!f.perm.is_identity()) ordered.push_back(f);
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < ordered.size(); ++i) index[ordered[i].perm] = static_cast<int>(i);
    int k = static_cast<int>(ordered.size());
    GroupTable t;
    t.order = k;
    t.mul.assign(k * k, 0);
    t.inv.assign(k, 0);
    t.names.clear();
    for (int i = 0; i < k; ++i) {
      t.names.push_back("aut" + std::to_string(i));
      t.inv[i] = index.at(ordered[i].perm.inverse());
      for (int j = 0; j < k; ++j) t.mul[i * k + j] = index.at((ordered[i].perm * ordered[j].perm));
    }
    for (const auto& f : ordered) cls.auts.push_back(HopfAutomorphism{QMatrix(0, 0), f});
    cls.aut_table = t;
    cls.materialized = k_of_group(t);
  }
  return cls;
}

/// Coordinates of a Hopf derivation in the solved basis; nullopt if it lies
/// outside the span (which certifies incompleteness).
inline std::optional<QVector> der_coordinates(const Classifier& cls, const HopfDerivation& psi) {
  std::size_t dim = cls.der_basis.size();
  QVector target = detail::flatten_derivation(cls.h, psi);
  QMatrix m(target.size(), dim);
  for (std::size_t j = 0; j < dim; ++j) {
    QVector col = detail::flatten_derivation(cls.h, cls.der_basis[j]);
    for (std::size_t r = 0; r < col.size(); ++r) m.at(r, j) = col[r];
  }
  return solve(m, target);
}

inline HopfDerivation der_from_coordinates(const Classifier& cls, const QVector& coords) {
  HopfDerivation out = HopfDerivation::zero(cls.h);
  for (std::size_t i = 0; i < cls.der_basis.size(); ++i)
    if (coords[i] != 0) out = derivation_add(out, cls.der_basis[i], coords[i]);
  return out;
}

/// (psi (x) phi) * h = psi(phi(h)).
inline HopfElement star_action(const Classifier& cls, const HopfDerivation& psi,
                               const HopfAutomorphism& phi, const HopfElement& h) {
  return apply_derivation(cls.h, psi, apply_automorphism(cls.h, phi, h));
}

/// The canonical action of [H] on H, materialized over a finite subgroup of
/// Aut_Hopf(H) (all of it when enumerable). The actor algebra is the CGKMM
/// form of U(Der_Hopf(H)) x| K[subgroup] with the conjugation action; the
/// structural action data is exactly (auts, der_basis), so the standard
/// action verification sweeps apply to the star action as-is.
inline HopfAction star_action_on(const Classifier& cls, const std::vector<HopfAutomorphism>& aut_subgroup) {
  std::size_t nd = cls.der_basis.size();
  // Lie structure on Der_Hopf(H): [psi_i, psi_j] in coordinates is the
  // element acting as psi_j o psi_i - psi_i o psi_j.
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nd; ++i) names.push_back("psi" + std::to_string(i));
  std::map<std::pair<int, int>, QVector> br;
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = i + 1; j < nd; ++j) {
      HopfDerivation breck = derivation_bracket(cls.h, cls.der_basis[j], cls.der_basis[i]);
      auto coords = der_coordinates(cls, breck);
      if (!coords) throw internal_error("Der_Hopf is not bracket-closed");
      if (!qvec_is_zero(*coords)) br[{static_cast<int>(i), static_cast<int>(j)}] = *coords;
    }
  LieAlgebra derlie = lie_from_structure_constants(names, br);

  // subgroup table over the given automorphisms
  int k = static_cast<int>(aut_subgroup.size());
  auto find_index = [&](const HopfAutomorphism& a) {
    for (int i = 0; i < k; ++i)
      if (aut_subgroup[i] == a) return i;
    throw input_error("automorphism list is not closed under composition");
  };
  if (k == 0 || !(aut_subgroup[0] == HopfAutomorphism::identity(cls.h)))
    throw input_error("automorphism list must start with the identity");
  GroupTable t;
  t.order = k;
  t.mul.assign(k * k, 0);
  t.inv.assign(k, 0);
  t.names.clear();
  for (int i = 0; i < k; ++i) {
    t.names.push_back("aut" + std::to_string(i));
    for (int j = 0; j < k; ++j) t.mul[i * k + j] = find_index(aut_compose(aut_subgroup[i], aut_subgroup[j]));
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (t.mul[i * k + j] == 0) t.inv[i] = j;

  // conjugation representation of the subgroup on Der_Hopf(H)
  LinearRep rep;
  rep.dim = static_cast<int>(nd);
  for (int i = 0; i < k; ++i) {
    QMatrix m(nd, nd);
    for (std::size_t c = 0; c < nd; ++c) {
      HopfDerivation conj = conjugate_derivation(cls.h, aut_subgroup[i], cls.der_basis[c]);
      auto coords = der_coordinates(cls, conj);
      if (!coords) throw internal_error("Der_Hopf is not conjugation-stable");
      for (std::size_t r = 0; r < nd; ++r) m.at(r, c) = (*coords)[r];
    }
    rep.mats.push_back(m);
  }
  CgkmmHopf actor = make_cgkmm(t, derlie, rep);
  return action_make(actor, cls.h, aut_subgroup, cls.der_basis);
}

/// Closes a list of automorphisms into a subgroup (identity first); nullopt
/// if the closure exceeds the bound.
inline std::optional<std::vector<HopfAutomorphism>> close_automorphisms(
    const CgkmmHopf& h, const std::vector<HopfAutomorphism>& seed, std::size_t bound = 128) {
  std::vector<HopfAutomorphism> out{HopfAutomorphism::identity(h)};
  auto contains = [&](const HopfAutomorphism& a) {
    for (const auto& x : out)
      if (x == a) return true;
    return false;
  };
  for (const auto& s : seed)
    if (!contains(s)) out.push_back(s);
  for (std::size_t head = 0; head < out.size(); ++head) {
    HopfAutomorphism inv = aut_invert(out[head]);
    if (!contains(inv)) out.push_back(inv);
    for (std::size_t j = 0; j < out.size(); ++j) {
      HopfAutomorphism p = aut_compose(out[head], out[j]);
      if (!contains(p)) out.push_back(p);
      if (out.size() > bound) return std::nullopt;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The universal morphism chi of a split extension with kernel H
// ---------------------------------------------------------------------------

struct UniversalMorphism {
  std::vector<HopfAutomorphism> chi_g;  // one per quotient grouplike
  std::vector<QVector> chi_l;           // der-basis coordinates per quotient primitive
};

struct UniversalResult {
  UniversalMorphism chi;
  VerifyResult certification;
};

/// Checks that candidate data is a valid morphism into the classifier:
/// grouplikes to automorphisms multiplicatively, primitives into the
/// derivation span as a Lie morphism (composition rule), and the
/// conjugation cross-compatibility.
inline VerifyResult universal_validity(const Classifier& cls, const CgkmmHopf& b,
                                       const UniversalMorphism& chi) {
  if (static_cast<int>(chi.chi_g.size()) != b.group.order)
    return VerifyResult::fail("morphism validity", "wrong number of grouplike images");
  if (static_cast<int>(chi.chi_l.size()) != b.lie.dim)
    return VerifyResult::fail("morphism validity", "wrong number of primitive images");
  for (int g = 0; g < b.group.order; ++g)
    if (!aut_membership(cls.h, chi.chi_g[g].alpha, chi.chi_g[g].beta))
      return VerifyResult::fail("morphism validity",
                                "image of " + b.group.name(g) + " is not a Hopf automorphism");
  for (int g = 0; g < b.group.order; ++g)
    for (int k = 0; k < b.group.order; ++k)
      if (!(aut_compose(chi.chi_g[g], chi.chi_g[k]) == chi.chi_g[b.group.op(g, k)]))
        return VerifyResult::fail("morphism validity", "chi_G not multiplicative at (" +
                                                           b.group.name(g) + "," + b.group.name(k) + ")");
  auto der_of = [&](int j) { return der_from_coordinates(cls, chi.chi_l[j]); };
  auto der_of_vec = [&](const QVector& y) {
    HopfDerivation out = HopfDerivation::zero(cls.h);
    for (int j = 0; j < b.lie.dim; ++j)
      if (y[j] != 0) out = derivation_add(out, der_of(j), y[j]);
    return out;
  };
  for (int i = 0; i < b.lie.dim; ++i)
    for (int j = i + 1; j < b.lie.dim; ++j) {
      HopfDerivation lhs = der_of_vec(b.lie.basis_bracket(i, j));
      HopfDerivation rhs = derivation_bracket(cls.h, der_of(j), der_of(i));
      if (!(lhs == rhs))
        return VerifyResult::fail("morphism validity", "chi_L violates the composition rule at (" +
                                                           b.lie.name(i) + "," + b.lie.name(j) + ")");
    }
  for (int g = 0; g < b.group.order; ++g)
    for (int i = 0; i < b.lie.dim; ++i) {
      HopfDerivation lhs = der_of_vec(b.tau_of(g).col(i));
      HopfDerivation rhs = conjugate_derivation(cls.h, chi.chi_g[g], der_of(i));
      if (!(lhs == rhs))
        return VerifyResult::fail("morphism validity",
                                  "cross compatibility fails at (g=" + b.group.name(g) + ", y=" +
                                      b.lie.name(i) + ")");
    }
  return VerifyResult::pass();
}

/// Diagram commutation on generators: the extension action equals the star
/// action through chi.
inline VerifyResult universal_commutes(const Classifier& cls, const SplitExtension& ext,
                                       const UniversalMorphism& chi) {
  const CgkmmHopf& b = ext.quotient_algebra;
  const CgkmmHopf& h = cls.h;
  std::vector<std::pair<HopfElement, std::string>> hgens;
  for (int g = 0; g < h.group.order; ++g) hgens.push_back({he_grouplike(h, g), h.group.name(g)});
  for (int i = 0; i < h.lie.dim; ++i) hgens.push_back({he_primitive(h, i), h.lie.name(i)});
  for (int g = 0; g < b.group.order; ++g)
    for (const auto& [x, xname] : hgens) {
      HopfElement lhs = action_evaluate(ext.action, he_grouplike(b, g), x);
      HopfElement rhs = apply_automorphism(h, chi.chi_g[g], x);
      if (lhs != rhs)
        return VerifyResult::fail("diagram commutation",
                                  "(b=" + b.group.name(g) + ", h=" + xname + ")");
    }
  for (int j = 0; j < b.lie.dim; ++j) {
    HopfDerivation psi = der_from_coordinates(cls, chi.chi_l[j]);
    for (const auto& [x, xname] : hgens) {
      HopfElement lhs = action_evaluate(ext.action, he_primitive(b, j), x);
      HopfElement rhs = apply_derivation(h, psi, x);
      if (lhs != rhs)
        return VerifyResult::fail("diagram commutation", "(b=" + b.lie.name(j) + ", h=" + xname + ")");
    }
  }
  return VerifyResult::pass();
}

/// chi from the extension's action: chi_G(g) = (g . -), chi_L(y) = (y . -)
/// in classifier coordinates. Certifies (a) validity and (b) commutation;
/// uniqueness competitors are checked with universal_commutes.
inline UniversalResult universal_morphism(const Classifier& cls, const SplitExtension& ext) {
  if (!(ext.kernel_algebra == cls.h))
    throw input_error("extension kernel differs from the classified algebra");
  UniversalResult out;
  for (int g = 0; g < ext.quotient_algebra.group.order; ++g) out.chi.chi_g.push_back(ext.action.grp[g]);
  for (int j = 0; j < ext.quotient_algebra.lie.dim; ++j) {
    auto coords = der_coordinates(cls, ext.action.lie[j]);
    if (!coords) {
      out.certification = VerifyResult::fail(
          "classifier completeness", "action derivation outside the solved span at " +
                                         ext.quotient_algebra.lie.name(j));
      return out;
    }
    out.chi.chi_l.push_back(*coords);
  }
  VerifyResult valid = universal_validity(cls, ext.quotient_algebra, out.chi);
  if (!valid.ok) {
    out.certification = valid;
    return out;
  }
  out.certification = universal_commutes(cls, ext, out.chi);
  return out;
}

}  // namespace hopf
