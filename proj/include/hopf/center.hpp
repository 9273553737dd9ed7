#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/action.hpp"
#include "hopf/classifier.hpp"
#include "hopf/morphism.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Normality: generator conditions cross-checked against the literal
// adjoint-stability condition a_1 h S(a_2) in H at bounded degree
// ---------------------------------------------------------------------------

struct NormalityReport {
  bool normal = true;
  std::string witness;
};

namespace detail {

inline std::vector<std::pair<HopfElement, std::string>> subalgebra_generators(const HopfSubalgebra& sub) {
  const CgkmmHopf& a = sub.ambient;
  std::vector<std::pair<HopfElement, std::string>> gens;
  for (int k : sub.subgroup)
    if (k != 0) gens.push_back({he_grouplike(a, k), a.group.name(k)});
  for (const auto& v : sub.sublie.basis()) {
    HopfElement e = he_from_vector(a, v);
    gens.push_back({e, element_to_string(a, e)});
  }
  return gens;
}

}  // namespace detail

/// Checks the generator conditions and, independently, the element-level
/// conditions a_1 h S(a_2) in H and S(a_1) h a_2 in H for all basis elements
/// a of degree <= d against all generators h of H. Disagreement between the
/// two routes is an implementation-bug signal and throws.
inline NormalityReport is_normal(const CgkmmHopf& a, const HopfSubalgebra& sub, int d) {
  if (!(sub.ambient == a)) throw input_error("subalgebra does not live in this algebra");
  auto gen_witness = normal_conditions_witness(sub);

  BasisIndex index(a, d + 1);
  Subspace span = sub_truncation_span(sub, index);
  std::optional<std::string> oracle_witness;
  auto gens = detail::subalgebra_generators(sub);
  std::vector<BasisElem> basis = enumerate_basis(a, d);
  for (const auto& ab : basis) {
    if (oracle_witness) break;
    Tensor2 delta = hopf_coproduct(a, he_basis(a, ab.first, ab.second));
    for (const auto& [h, hname] : gens) {
      HopfElement left, right;
      for (const auto& [p, c] : delta) {
        HopfElement s2 = hopf_antipode(a, he_basis(a, p.second.first, p.second.second));
        HopfElement mid = hopf_mul(a, h, s2);
        he_add(left, hopf_mul(a, he_basis(a, p.first.first, p.first.second), mid), c);
        HopfElement s1 = hopf_antipode(a, he_basis(a, p.first.first, p.first.second));
        HopfElement mid2 = hopf_mul(a, s1, h);
        he_add(right, hopf_mul(a, mid2, he_basis(a, p.second.first, p.second.second)), c);
      }
      auto lc = index.coords(left);
      auto rc = index.coords(right);
      if (!lc || !rc) throw internal_error("adjoint value left the degree window");
      if (!span.contains(*lc)) {
        oracle_witness = "a_1 h S(a_2) leaves the subalgebra at (a=" + basis_to_string(a, ab) +
                         ", h=" + hname + ")";
        break;
      }
      if (!span.contains(*rc)) {
        oracle_witness = "S(a_1) h a_2 leaves the subalgebra at (a=" + basis_to_string(a, ab) +
                         ", h=" + hname + ")";
        break;
      }
    }
  }
  if (gen_witness.has_value() != oracle_witness.has_value())
    throw internal_error("normality routes disagree: generator conditions say " +
                         std::string(gen_witness ? "no" : "yes") + " but the adjoint oracle says " +
                         std::string(oracle_witness ? "no" : "yes") +
                         (gen_witness ? " (" + *gen_witness + ")" : "") +
                         (oracle_witness ? " (" + *oracle_witness + ")" : ""));
  NormalityReport rep;
  if (gen_witness) {
    rep.normal = false;
    rep.witness = *gen_witness;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Conjugation action of A on a normal subalgebra H: h . x = h_1 x S(h_2)
// ---------------------------------------------------------------------------

struct ConjugationAction {
  MaterializedSub carrier;
  HopfAction action;  // actor A, target the materialized subalgebra
};

inline ConjugationAction conjugation_action(const CgkmmHopf& a, const HopfSubalgebra& sub) {
  if (auto w = normal_conditions_witness(sub))
    throw math_error("conjugation action needs a normal subalgebra: " + *w);
  MaterializedSub mat = materialize_subalgebra(sub);
  const CgkmmHopf& s = mat.algebra;
  int r = s.lie.dim;
  QMatrix vmat = mat.inclusion.alpha;  // columns span the Lie part
  auto in_coords = [&](const QVector& w) {
    auto x = solve(vmat, w);
    if (!x) throw internal_error("conjugation value leaves the subalgebra span");
    return *x;
  };
  std::vector<int> pos(a.group.order, -1);
  for (std::size_t i = 0; i < sub.subgroup.size(); ++i) pos[sub.subgroup[i]] = static_cast<int>(i);

  HopfAction act;
  act.actor = a;
  act.target = s;
  for (int g = 0; g < a.group.order; ++g) {
    Permutation beta;
    beta.img.resize(s.group.order);
    for (int k = 0; k < s.group.order; ++k) {
      int img = a.group.conj(g, sub.subgroup[k]);
      if (pos[img] < 0) throw internal_error("conjugation leaves the subgroup");
      beta.img[k] = pos[img];
    }
    QMatrix alpha(r, r);
    for (int i = 0; i < r; ++i) {
      QVector w = a.tau_of(g) * vmat.col(i);
      QVector x = in_coords(w);
      for (int j = 0; j < r; ++j) alpha.at(j, i) = x[j];
    }
    act.grp.push_back(HopfAutomorphism{alpha, GroupAut{beta}});
  }
  for (int i = 0; i < a.lie.dim; ++i) {
    HopfDerivation der = HopfDerivation::zero(s);
    QVector xi = qvec_unit(a.lie.dim, i);
    for (int c = 0; c < r; ++c) {
      // x . v = x v - v x = [v, x]
      QVector w = a.lie.bracket(vmat.col(c), xi);
      QVector coords = in_coords(w);
      for (int rr = 0; rr < r; ++rr) der.delta.at(rr, c) = coords[rr];
    }
    for (int k = 0; k < s.group.order; ++k) {
      // x . n = (x - tau(n) x) n
      QVector w = qvec_sub(xi, a.tau_of(sub.subgroup[k]) * xi);
      der.d[k] = in_coords(w);
    }
    act.lie.push_back(der);
  }
  if (auto w = action_witness(act)) throw internal_error("conjugation action invalid: " + *w);
  return ConjugationAction{std::move(mat), std::move(act)};
}

// ---------------------------------------------------------------------------
// Centralizers and the center
// ---------------------------------------------------------------------------

struct CentralizerResult {
  HopfSubalgebra subalgebra;
  std::vector<int> ker_grp;
  Subspace ker_lie;
  VerifyResult certification;
};

/// Brute-force commutant: the degree-<= d solution space of u h = h u
/// against all subalgebra generators, in degree-<= d coordinates.
inline Subspace commutant_space(const CgkmmHopf& a, const HopfSubalgebra& sub, int d) {
  BasisIndex low(a, d);
  BasisIndex high(a, d + 1);
  auto gens = detail::subalgebra_generators(sub);
  std::vector<QVector> rows;
  std::size_t n = low.size();
  std::map<std::pair<std::size_t, int>, QVector> sparse;  // (high coord, gen) -> row
  for (std::size_t i = 0; i < n; ++i) {
    const BasisElem& b = low.elems[i];
    HopfElement e = he_basis(a, b.first, b.second);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      HopfElement comm = hopf_mul(a, e, gens[gi].first);
      he_add(comm, hopf_mul(a, gens[gi].first, e), Rat(-1));
      auto coords = high.coords(comm);
      if (!coords) throw internal_error("commutator left the degree window");
      for (std::size_t r = 0; r < coords->size(); ++r) {
        if ((*coords)[r] == 0) continue;
        auto key = std::make_pair(r, static_cast<int>(gi));
        auto it = sparse.find(key);
        if (it == sparse.end()) it = sparse.emplace(key, qvec_zero(n)).first;
        it->second[i] = (*coords)[r];
      }
    }
  }
  for (auto& [k, row] : sparse) rows.push_back(row);
  if (rows.empty()) return Subspace::full(n);
  return Subspace::span_of(nullspace(QMatrix::from_rows(rows, n)), n);
}

/// C_A(H) by the kernel formula: grouplikes centralizing G_H and fixing L_H,
/// primitives commuting with L_H and fixed by tau(G_H). Certified two-sidedly
/// against the brute-force commutant at degree <= d; mismatch throws.
inline CentralizerResult centralizer(const CgkmmHopf& a, const HopfSubalgebra& sub, int d = 3) {
  NormalityReport nr = is_normal(a, sub, d);
  if (!nr.normal) throw math_error("centralizer needs a normal subalgebra: " + nr.witness);

  std::vector<int> ker_grp;
  for (int g = 0; g < a.group.order; ++g) {
    bool ok = true;
    for (int k : sub.subgroup)
      if (a.group.op(g, k) != a.group.op(k, g)) {
        ok = false;
        break;
      }
    if (ok)
      for (const auto& v : sub.sublie.basis())
        if (!(a.tau_of(g) * v == v)) {
          ok = false;
          break;
        }
    if (ok) ker_grp.push_back(g);
  }
  std::vector<QVector> rows;
  int n = a.lie.dim;
  for (const auto& v : sub.sublie.basis())
    for (int k = 0; k < n; ++k) {
      QVector row(n, Rat(0));
      for (int i = 0; i < n; ++i) row[i] = a.lie.bracket(qvec_unit(n, i), v)[k];
      if (!qvec_is_zero(row)) rows.push_back(row);
    }
  for (int kk : sub.subgroup)
    for (int k = 0; k < n; ++k) {
      QVector row(n, Rat(0));
      for (int i = 0; i < n; ++i) {
        row[i] = a.tau_of(kk).at(k, i);
        if (i == k) row[i] -= 1;
      }
      if (!qvec_is_zero(row)) rows.push_back(row);
    }
  Subspace ker_lie = rows.empty() ? Subspace::full(n)
                                  : Subspace::span_of(nullspace(QMatrix::from_rows(rows, n)), n);

  CentralizerResult out;
  try {
    out.subalgebra = subalgebra_make(a, ker_grp, ker_lie);
  } catch (const Error& e) {
    throw internal_error(std::string("centralizer is not a subalgebra: ") + e.what());
  }
  out.ker_grp = ker_grp;
  out.ker_lie = ker_lie;

  BasisIndex low(a, d);
  Subspace claimed = sub_truncation_span(out.subalgebra, low);
  Subspace brute = commutant_space(a, sub, d);
  if (!brute.contains(claimed))
    throw internal_error("centralizer element fails to commute with a generator");
  if (!claimed.contains(brute))
    throw internal_error("brute-force commutant exceeds the centralizer formula");
  out.certification = VerifyResult::pass();
  return out;
}

inline CentralizerResult center(const CgkmmHopf& a, int d = 3) {
  return centralizer(a, full_subalgebra(a), d);
}

// ---------------------------------------------------------------------------
// Comparison with the Hopf-algebra center HZ(A)
// ---------------------------------------------------------------------------

struct HzReport {
  std::vector<int> dims_zalg;    // per-degree dimensions of the truncated algebraic center
  std::vector<int> dims_hz;      // ... of the Delta-criterion space
  std::vector<int> dims_center;  // ... of the categorical center's truncation
  bool equal = false;
  int degree = 0;
};

namespace detail {

inline std::vector<int> graded_dims(const Subspace& space, const BasisIndex& index, int d) {
  std::vector<int> dims;
  int prev = 0;
  for (int t = 0; t <= d; ++t) {
    // dimension of {v in space : supported in degree <= t}
    std::vector<std::size_t> high;
    for (std::size_t i = 0; i < index.size(); ++i)
      if (monomial_degree(index.elems[i].first) > t) high.push_back(i);
    std::size_t k = space.dim();
    QMatrix m(high.size(), k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < high.size(); ++r) m.at(r, c) = space.basis()[c][high[r]];
    int dim_t = m.rows() == 0 ? static_cast<int>(k) : static_cast<int>(nullspace(m).size());
    dims.push_back(dim_t - prev);
    prev = dim_t;
  }
  return dims;
}

}  // namespace detail

/// Truncated algebraic center, the Chirvasitu-Kasprzak Delta-criterion space
/// against it, and the categorical center's truncation, with per-degree
/// dimensions; `equal` asserts criterion space = center truncation.
inline HzReport hz_compare(const CgkmmHopf& a, int d = 3) {
  if (d < 1) throw input_error("degree bound must be >= 1");
  BasisIndex low(a, d);
  std::size_t n = low.size();

  // (1) truncated Z_alg: commute with every basis element of degree <= d
  Subspace zalg(n);
  {
    BasisIndex prod(a, 2 * d);
    std::map<std::pair<std::size_t, std::size_t>, QVector> sparse;
    for (std::size_t i = 0; i < n; ++i) {
      HopfElement e = he_basis(a, low.elems[i].first, low.elems[i].second);
      for (std::size_t j = 0; j < n; ++j) {
        HopfElement v = he_basis(a, low.elems[j].first, low.elems[j].second);
        HopfElement comm = hopf_mul(a, e, v);
        he_add(comm, hopf_mul(a, v, e), Rat(-1));
        auto coords = prod.coords(comm);
        if (!coords) throw internal_error("commutator left the degree window");
        for (std::size_t r = 0; r < coords->size(); ++r)
          if ((*coords)[r] != 0) {
            auto key = std::make_pair(r, j);
            auto it = sparse.find(key);
            if (it == sparse.end()) it = sparse.emplace(key, qvec_zero(n)).first;
            it->second[i] = (*coords)[r];
          }
      }
    }
    std::vector<QVector> rows;
    for (auto& [k, row] : sparse) rows.push_back(row);
    zalg = rows.empty() ? Subspace::full(n) : Subspace::span_of(nullspace(QMatrix::from_rows(rows, n)), n);
  }

  // (2) Delta-criterion: Delta(u) in A (x) Z_alg^{(d)}
  std::vector<QVector> reduced_units;  // unit vectors reduced mod zalg
  for (std::size_t q = 0; q < n; ++q) reduced_units.push_back(zalg.reduce(qvec_unit(n, q)));
  std::map<std::pair<std::size_t, std::size_t>, QVector> sparse;
  for (std::size_t i = 0; i < n; ++i) {
    Tensor2 delta = hopf_coproduct(a, he_basis(a, low.elems[i].first, low.elems[i].second));
    for (const auto& [p, c] : delta) {
      auto pit = low.index.find(p.first);
      auto qit = low.index.find(p.second);
      if (pit == low.index.end() || qit == low.index.end())
        throw internal_error("coproduct left the degree window");
      const QVector& red = reduced_units[qit->second];
      for (std::size_t r = 0; r < n; ++r)
        if (red[r] != 0) {
          auto key = std::make_pair(static_cast<std::size_t>(pit->second), r);
          auto it = sparse.find(key);
          if (it == sparse.end()) it = sparse.emplace(key, qvec_zero(n)).first;
          it->second[i] += c * red[r];
        }
    }
  }
  for (auto it = sparse.begin(); it != sparse.end();) {
    if (qvec_is_zero(it->second))
      it = sparse.erase(it);
    else
      ++it;
  }
  std::vector<QVector> rows;
  for (auto& [k, row] : sparse) rows.push_back(row);
  Subspace hz = rows.empty() ? Subspace::full(n) : Subspace::span_of(nullspace(QMatrix::from_rows(rows, n)), n);

  // (3) the categorical center's truncation
  CentralizerResult z = center(a, d);
  Subspace ztrunc = sub_truncation_span(z.subalgebra, low);

  HzReport rep;
  rep.degree = d;
  rep.dims_zalg = detail::graded_dims(zalg, low, d);
  rep.dims_hz = detail::graded_dims(hz, low, d);
  rep.dims_center = detail::graded_dims(ztrunc, low, d);
  rep.equal = (hz == ztrunc);
  return rep;
}

}  // namespace hopf
