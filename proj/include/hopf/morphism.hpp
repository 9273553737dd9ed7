#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/hopf.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Morphisms, determined by the images of grouplikes and primitives
// ---------------------------------------------------------------------------

struct HopfMorphism {
  CgkmmHopf src, tgt;
  QMatrix alpha;          // Lie part: tgt.lie.dim x src.lie.dim
  std::vector<int> beta;  // group part: one target label per source label

  bool same_maps(const HopfMorphism& o) const { return alpha == o.alpha && beta == o.beta; }
};

inline std::optional<std::string> morphism_witness(const CgkmmHopf& a, const CgkmmHopf& b,
                                                   const QMatrix& alpha, const std::vector<int>& beta) {
  if (static_cast<int>(beta.size()) != a.group.order) return "group map has wrong domain size";
  for (int v : beta)
    if (v < 0 || v >= b.group.order) return "group map image out of range";
  if (beta[0] != 0) return "group map does not preserve the identity";
  for (int x = 0; x < a.group.order; ++x)
    for (int y = 0; y < a.group.order; ++y)
      if (beta[a.group.op(x, y)] != b.group.op(beta[x], beta[y]))
        return "group map not multiplicative at (" + a.group.name(x) + "," + a.group.name(y) + ")";
  if (alpha.rows() != static_cast<std::size_t>(b.lie.dim) ||
      alpha.cols() != static_cast<std::size_t>(a.lie.dim))
    return "Lie map has wrong shape";
  if (auto w = lie_hom_witness(a.lie, b.lie, alpha)) return "Lie map: " + *w;
  for (int g = 0; g < a.group.order; ++g) {
    QMatrix lhs = alpha * a.tau_of(g);
    QMatrix rhs = b.tau_of(beta[g]) * alpha;
    if (!(lhs == rhs)) {
      for (int i = 0; i < a.lie.dim; ++i)
        if (!(lhs.col(i) == rhs.col(i)))
          return "equivariance fails at (g=" + a.group.name(g) + ", x=" + a.lie.name(i) + ")";
    }
  }
  return std::nullopt;
}

inline HopfMorphism morphism_make(CgkmmHopf a, CgkmmHopf b, QMatrix alpha, std::vector<int> beta) {
  if (auto w = morphism_witness(a, b, alpha, beta)) throw input_error("invalid morphism: " + *w);
  return HopfMorphism{std::move(a), std::move(b), std::move(alpha), std::move(beta)};
}

inline HopfMorphism identity_morphism(const CgkmmHopf& h) {
  std::vector<int> beta(h.group.order);
  for (int g = 0; g < h.group.order; ++g) beta[g] = g;
  return HopfMorphism{h, h, QMatrix::identity(h.lie.dim), beta};
}

/// Zero morphism A -> K (counit followed by the unit of the trivial algebra).
inline HopfMorphism zero_morphism(const CgkmmHopf& a) {
  return HopfMorphism{a, trivial_hopf(), QMatrix(0, a.lie.dim), std::vector<int>(a.group.order, 0)};
}

inline HopfMorphism compose_morphisms(const HopfMorphism& g, const HopfMorphism& f) {
  if (!(f.tgt == g.src)) throw input_error("morphism composition mismatch");
  std::vector<int> beta(f.src.group.order);
  for (int x = 0; x < f.src.group.order; ++x) beta[x] = g.beta[f.beta[x]];
  return HopfMorphism{f.src, g.tgt, g.alpha * f.alpha, beta};
}

inline HopfElement apply_morphism(const HopfMorphism& phi, const HopfElement& u) {
  HopfElement out;
  for (const auto& [b, c] : u) {
    UEnvElement img(uenv_apply_linear(phi.src.lie, phi.tgt.lie, phi.alpha, [&] {
      UEnvElement e;
      e.emplace(b.first, Rat(1));
      return e;
    }()));
    he_add(out, he_from_uenv(img, phi.beta[b.second]), c);
  }
  return out;
}

inline bool morphism_injective(const HopfMorphism& phi) {
  std::vector<bool> hit(phi.tgt.group.order, false);
  for (int v : phi.beta) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return nullspace(phi.alpha).empty();
}

inline bool morphism_surjective(const HopfMorphism& phi) {
  std::vector<bool> hit(phi.tgt.group.order, false);
  for (int v : phi.beta) hit[v] = true;
  for (bool b : hit)
    if (!b) return false;
  QMatrix m = phi.alpha;
  return static_cast<int>(rref(m).size()) == phi.tgt.lie.dim;
}

// ---------------------------------------------------------------------------
// Sub-Hopf algebras in coordinates: a closed subgroup plus a bracket-closed,
// tau-stable Lie subspace
// ---------------------------------------------------------------------------

struct HopfSubalgebra {
  CgkmmHopf ambient;
  std::vector<int> subgroup;  // sorted labels, closed
  Subspace sublie;

  bool same_subobject(const HopfSubalgebra& o) const {
    return subgroup == o.subgroup && sublie == o.sublie;
  }
};

inline std::optional<std::string> subalgebra_witness(const CgkmmHopf& a, const std::vector<int>& subgroup,
                                                     const Subspace& sublie) {
  if (!is_subgroup(a.group, subgroup)) return "group part is not a closed subgroup";
  if (sublie.ambient_dim() != static_cast<std::size_t>(a.lie.dim)) return "Lie part has wrong ambient dimension";
  if (!subspace_bracket_closed(a.lie, sublie)) return "Lie part is not bracket-closed";
  for (int g : subgroup)
    for (const auto& v : sublie.basis())
      if (!sublie.contains(a.tau_of(g) * v))
        return "Lie part is not stable under tau(" + a.group.name(g) + ")";
  return std::nullopt;
}

inline HopfSubalgebra subalgebra_make(CgkmmHopf a, std::vector<int> subgroup, Subspace sublie) {
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  if (auto w = subalgebra_witness(a, subgroup, sublie)) throw input_error("invalid subalgebra: " + *w);
  return HopfSubalgebra{std::move(a), std::move(subgroup), std::move(sublie)};
}

inline HopfSubalgebra trivial_subalgebra(const CgkmmHopf& a) {
  return HopfSubalgebra{a, {0}, Subspace(a.lie.dim)};
}

inline HopfSubalgebra full_subalgebra(const CgkmmHopf& a) {
  std::vector<int> all(a.group.order);
  for (int i = 0; i < a.group.order; ++i) all[i] = i;
  return HopfSubalgebra{a, all, Subspace::full(a.lie.dim)};
}

/// The subalgebra as a Hopf algebra in its own right, with its inclusion.
struct MaterializedSub {
  CgkmmHopf algebra;
  HopfMorphism inclusion;
  std::vector<int> group_embedding;
};

inline MaterializedSub materialize_subalgebra(const HopfSubalgebra& sub) {
  const CgkmmHopf& a = sub.ambient;
  auto [sgroup, emb] = subgroup_table(a.group, sub.subgroup);
  int r = static_cast<int>(sub.sublie.dim());
  QMatrix vmat(a.lie.dim, r);  // columns are the subspace basis
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < a.lie.dim; ++j) vmat.at(j, i) = sub.sublie.basis()[i][j];
  auto in_coords = [&](const QVector& w) {
    auto x = solve(vmat, w);
    if (!x) throw internal_error("subalgebra vector left its own span");
    return *x;
  };
  std::vector<std::string> names;
  for (int i = 0; i < r; ++i) {
    const QVector& v = sub.sublie.basis()[i];
    int nonzero = -1;
    bool unitvec = true;
    for (int j = 0; j < a.lie.dim; ++j)
      if (v[j] != 0) {
        if (nonzero >= 0 || v[j] != 1) unitvec = false;
        nonzero = j;
      }
    names.push_back(unitvec && nonzero >= 0 ? a.lie.name(nonzero) : "v" + std::to_string(i));
  }
  std::map<std::pair<int, int>, QVector> br;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      QVector w = a.lie.bracket(sub.sublie.basis()[i], sub.sublie.basis()[j]);
      QVector coords = in_coords(w);
      if (!qvec_is_zero(coords)) br[{i, j}] = coords;
    }
  LieAlgebra slie;
  try {
    slie = lie_from_structure_constants(names, br);
  } catch (const Error& e) {
    throw internal_error(std::string("subalgebra Lie part invalid: ") + e.what());
  }
  LinearRep stau;
  stau.dim = r;
  for (std::size_t s = 0; s < sub.subgroup.size(); ++s) {
    QMatrix m(r, r);
    for (int i = 0; i < r; ++i) {
      QVector coords = in_coords(a.tau_of(sub.subgroup[s]) * sub.sublie.basis()[i]);
      for (int j = 0; j < r; ++j) m.at(j, i) = coords[j];
    }
    stau.mats.push_back(m);
  }
  CgkmmHopf algebra;
  try {
    algebra = make_cgkmm(sgroup, slie, stau);
  } catch (const Error& e) {
    throw internal_error(std::string("subalgebra is not a Hopf algebra in coordinates: ") + e.what());
  }
  HopfMorphism incl;
  try {
    incl = morphism_make(algebra, a, vmat, emb);
  } catch (const Error& e) {
    throw internal_error(std::string("subalgebra inclusion invalid: ") + e.what());
  }
  return MaterializedSub{algebra, incl, emb};
}

/// Basis of the subalgebra's degree-<= d truncation inside the ambient
/// algebra: ordered products of the Lie basis times subgroup grouplikes.
inline std::vector<HopfElement> sub_truncation(const HopfSubalgebra& sub, int d) {
  const CgkmmHopf& a = sub.ambient;
  std::vector<HopfElement> out;
  for (const auto& expo : enumerate_monomials(static_cast<int>(sub.sublie.dim()), d)) {
    UEnvElement u = uenv_one(a.lie.dim);
    for (std::size_t i = 0; i < expo.size(); ++i)
      for (int k = 0; k < expo[i]; ++k) u = uenv_mul_linear(a.lie, u, sub.sublie.basis()[i]);
    for (int g : sub.subgroup) out.push_back(he_from_uenv(u, g));
  }
  return out;
}

/// Span of the truncation in degree-<= d coordinates.
inline Subspace sub_truncation_span(const HopfSubalgebra& sub, const BasisIndex& index) {
  std::vector<QVector> rows;
  for (const auto& e : sub_truncation(sub, index.degree)) {
    auto v = index.coords(e);
    if (!v) throw internal_error("subalgebra truncation left the degree window");
    rows.push_back(*v);
  }
  return Subspace::span_of(rows, index.size());
}

// ---------------------------------------------------------------------------
// Hopf kernels
// ---------------------------------------------------------------------------

/// Solution space of the kernel condition p(h_1) (x) h_2 = 1 (x) h on the
/// degree-<= d truncation, in coordinates of `index`.
inline Subspace kernel_condition_space(const HopfMorphism& phi, const BasisIndex& index) {
  const CgkmmHopf& a = phi.src;
  // Column i holds (phi (x) id) Delta(b_i) - 1 (x) b_i, stretched over the
  // pairs (target basis, source basis) that occur.
  std::map<std::pair<BasisElem, BasisElem>, QVector, Tensor2Cmp> rows;
  std::size_t n = index.size();
  for (std::size_t i = 0; i < n; ++i) {
    const BasisElem& b = index.elems[i];
    Tensor2 delta = hopf_coproduct(a, he_basis(a, b.first, b.second));
    std::map<std::pair<BasisElem, BasisElem>, Rat, Tensor2Cmp> entry;
    for (const auto& [p, c] : delta) {
      HopfElement img = apply_morphism(phi, he_basis(a, p.first.first, p.first.second));
      for (const auto& [tb, tc] : img) {
        auto key = std::make_pair(tb, p.second);
        entry[key] += c * tc;
        if (entry[key] == 0) entry.erase(key);
      }
    }
    BasisElem unit_b{Monomial(phi.tgt.lie.dim, 0), 0};
    auto key = std::make_pair(unit_b, b);
    entry[key] -= 1;
    if (entry[key] == 0) entry.erase(key);
    for (const auto& [k, c] : entry) {
      auto it = rows.find(k);
      if (it == rows.end()) it = rows.emplace(k, qvec_zero(n)).first;
      it->second[i] = c;
    }
  }
  if (rows.empty()) return Subspace::full(n);
  std::vector<QVector> mat;
  for (const auto& [k, row] : rows) mat.push_back(row);
  return Subspace::span_of(nullspace(QMatrix::from_rows(mat, n)), n);
}

struct KernelResult {
  HopfSubalgebra kernel;
  VerifyResult certification;
};

/// HKer(phi) = (ker beta, ker alpha), certified two-sidedly at degree <= d:
/// every truncation element satisfies the kernel condition, and every
/// degree-<= d solution of the condition lies in the truncation span.
inline KernelResult hopf_kernel(const HopfMorphism& phi, int d = 3) {
  std::vector<int> kg;
  for (int g = 0; g < phi.src.group.order; ++g)
    if (phi.beta[g] == 0) kg.push_back(g);
  Subspace kl = Subspace::span_of(nullspace(phi.alpha), phi.src.lie.dim);
  HopfSubalgebra sub;
  try {
    sub = subalgebra_make(phi.src, kg, kl);
  } catch (const Error& e) {
    throw internal_error(std::string("kernel is not a subalgebra: ") + e.what());
  }
  BasisIndex index(phi.src, d);
  Subspace claimed = sub_truncation_span(sub, index);
  Subspace solved = kernel_condition_space(phi, index);
  VerifyResult cert = VerifyResult::pass();
  if (!solved.contains(claimed))
    cert = VerifyResult::fail("kernel condition", "claimed kernel element violates p(h_1)(x)h_2 = 1(x)h");
  else if (!claimed.contains(solved))
    cert = VerifyResult::fail("kernel completeness", "degree-bounded solution outside the claimed kernel");
  return KernelResult{sub, cert};
}

// ---------------------------------------------------------------------------
// Normality (generator-level) and quotients
// ---------------------------------------------------------------------------

/// The four generator conditions equivalent to two-sided adjoint stability.
inline std::optional<std::string> normal_conditions_witness(const HopfSubalgebra& sub) {
  const CgkmmHopf& a = sub.ambient;
  if (auto w = normality_witness(a.group, sub.subgroup))
    return "subgroup not normal: conjugate of " + a.group.name(w->second) + " by " + a.group.name(w->first);
  for (int g = 0; g < a.group.order; ++g)
    for (const auto& v : sub.sublie.basis())
      if (!sub.sublie.contains(a.tau_of(g) * v)) return "tau(" + a.group.name(g) + ") does not preserve the Lie part";
  for (int i = 0; i < a.lie.dim; ++i)
    for (const auto& v : sub.sublie.basis())
      if (!sub.sublie.contains(a.lie.bracket(qvec_unit(a.lie.dim, i), v)))
        return "[" + a.lie.name(i) + ", Lie part] leaves the Lie part";
  for (int g : sub.subgroup)
    for (int i = 0; i < a.lie.dim; ++i) {
      QVector w = qvec_sub(qvec_unit(a.lie.dim, i), a.tau_of(g) * qvec_unit(a.lie.dim, i));
      if (!sub.sublie.contains(w))
        return "(id - tau(" + a.group.name(g) + "))(" + a.lie.name(i) + ") leaves the Lie part";
    }
  return std::nullopt;
}

struct QuotientResult {
  CgkmmHopf quotient;
  HopfMorphism projection;
};

/// Quotient by a normal sub-Hopf algebra, built coordinate-wise: G/G_H and
/// L/L_H with the induced action.
inline QuotientResult quotient_by_normal(const CgkmmHopf& a, const HopfSubalgebra& h) {
  if (!(h.ambient == a)) throw input_error("subalgebra does not live in this algebra");
  if (auto w = normal_conditions_witness(h)) throw math_error("subalgebra is not normal: " + *w);
  auto [qgroup, gproj] = quotient_group(a.group, h.subgroup);
  LieQuotient lq = quotient_by_ideal_closure(a.lie, h.sublie.basis());
  if (!(lq.ideal == h.sublie)) throw internal_error("normal Lie part is not its own ideal closure");
  QMatrix section = quotient_section(lq, a.lie.dim);
  // Representative-independent by normality; validated below.
  std::vector<int> reps(qgroup.order, -1);
  for (int g = 0; g < a.group.order; ++g)
    if (reps[gproj[g]] < 0) reps[gproj[g]] = g;
  LinearRep qtau;
  qtau.dim = lq.algebra.dim;
  for (int c = 0; c < qgroup.order; ++c) qtau.mats.push_back(lq.projection * a.tau_of(reps[c]) * section);
  CgkmmHopf quo;
  try {
    quo = make_cgkmm(qgroup, lq.algebra, qtau);
  } catch (const Error& e) {
    throw internal_error(std::string("quotient is not a Hopf algebra: ") + e.what());
  }
  HopfMorphism proj;
  try {
    proj = morphism_make(a, quo, lq.projection, gproj);
  } catch (const Error& e) {
    throw internal_error(std::string("quotient projection invalid: ") + e.what());
  }
  return QuotientResult{quo, proj};
}

// ---------------------------------------------------------------------------
// The Q functor: L / (smallest ideal containing all tau(g)x - x)
// ---------------------------------------------------------------------------

struct QFunctorResult {
  LieAlgebra algebra;
  QMatrix projection;
  Subspace ideal;
};

inline QFunctorResult functor_q(const CgkmmHopf& h) {
  std::vector<QVector> rels;
  for (int g = 0; g < h.group.order; ++g)
    for (int i = 0; i < h.lie.dim; ++i) {
      QVector w = qvec_sub(h.tau_of(g) * qvec_unit(h.lie.dim, i), qvec_unit(h.lie.dim, i));
      if (!qvec_is_zero(w)) rels.push_back(w);
    }
  LieQuotient lq = quotient_by_ideal_closure(h.lie, rels);
  return QFunctorResult{lq.algebra, lq.projection, lq.ideal};
}

}  // namespace hopf
