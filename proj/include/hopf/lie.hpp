#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/error.hpp"
#include "hopf/matrix.hpp"

namespace hopf {

class StraightenCache;

/// Finite-dimensional Lie algebra over Q by structure constants:
/// [e_i, e_j] = sum_k c^k_ij e_k. Antisymmetry and Jacobi hold exactly.
struct LieAlgebra {
  int dim = 0;
  std::vector<std::string> names;
  std::vector<QVector> c;  // c[i*dim+j] = [e_i, e_j]

  const QVector& basis_bracket(int i, int j) const { return c[i * dim + j]; }

  QVector bracket(const QVector& x, const QVector& y) const {
    QVector r(dim, Rat(0));
    for (int i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j] == 0) continue;
        const QVector& b = basis_bracket(i, j);
        Rat f = x[i] * y[j];
        for (int k = 0; k < dim; ++k)
          if (b[k] != 0) r[k] += f * b[k];
      }
    }
    return r;
  }

  std::string name(int i) const {
    return i < static_cast<int>(names.size()) ? names[i] : ("e" + std::to_string(i));
  }

  bool operator==(const LieAlgebra& o) const { return dim == o.dim && c == o.c; }
  bool operator!=(const LieAlgebra& o) const { return !(*this == o); }

  static LieAlgebra zero() { return LieAlgebra{}; }

  /// Straightening memo, created lazily by the PBW layer. Shared between
  /// copies; inserts are idempotent so sharing is observationally pure.
  mutable std::shared_ptr<StraightenCache> pbw_cache;
};

/// Validated constructor. `brackets` holds [e_i, e_j] for i < j (missing
/// pairs are zero); entries with i >= j must be antisymmetry-consistent.
inline LieAlgebra lie_from_structure_constants(const std::vector<std::string>& names,
                                               const std::map<std::pair<int, int>, QVector>& brackets) {
  LieAlgebra l;
  l.dim = static_cast<int>(names.size());
  l.names = names;
  l.c.assign(l.dim * l.dim, qvec_zero(l.dim));
  for (const auto& [ij, v] : brackets) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= l.dim || j >= l.dim) throw input_error("bracket index out of range");
    if (static_cast<int>(v.size()) != l.dim) throw input_error("bracket value has wrong dimension");
    if (i == j) {
      if (!qvec_is_zero(v))
        throw input_error("antisymmetry fails at (" + names[i] + "," + names[j] + "): [x,x] must vanish");
      continue;
    }
    l.c[i * l.dim + j] = v;
  }
  // Fill the transposed entries, rejecting inconsistent explicit pairs.
  for (const auto& [ij, v] : brackets) {
    auto [i, j] = ij;
    if (i <= j) continue;
    QVector neg = qvec_scale(Rat(-1), v);
    auto it = brackets.find({j, i});
    if (it != brackets.end() && !(it->second == neg))
      throw input_error("antisymmetry fails at (" + names[j] + "," + names[i] + ")");
  }
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j)
      if (qvec_is_zero(l.c[i * l.dim + j])) {
        auto it = brackets.find({j, i});
        if (it != brackets.end()) l.c[i * l.dim + j] = qvec_scale(Rat(-1), it->second);
      }
  for (int i = 0; i < l.dim; ++i)
    for (int j = 0; j < i; ++j) l.c[i * l.dim + j] = qvec_scale(Rat(-1), l.c[j * l.dim + i]);

  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j)
      for (int k = j + 1; k < l.dim; ++k) {
        QVector s = l.bracket(l.basis_bracket(i, j), qvec_unit(l.dim, k));
        s = qvec_add(s, l.bracket(l.basis_bracket(j, k), qvec_unit(l.dim, i)));
        s = qvec_add(s, l.bracket(l.basis_bracket(k, i), qvec_unit(l.dim, j)));
        if (!qvec_is_zero(s))
          throw input_error("Jacobi identity fails at (" + names[i] + "," + names[j] + "," + names[k] + ")");
      }
  return l;
}

/// Abelian algebra of the given dimension.
inline LieAlgebra lie_abelian(const std::vector<std::string>& names) {
  return lie_from_structure_constants(names, {});
}

/// Lie algebra morphism as a matrix (target dim x source dim).
struct LieHom {
  QMatrix mat;

  QVector apply(const QVector& x) const { return mat * x; }
};

inline std::optional<std::string> lie_hom_witness(const LieAlgebra& src, const LieAlgebra& tgt,
                                                  const QMatrix& mat) {
  if (mat.rows() != static_cast<std::size_t>(tgt.dim) || mat.cols() != static_cast<std::size_t>(src.dim))
    return "matrix shape mismatch";
  for (int i = 0; i < src.dim; ++i)
    for (int j = i + 1; j < src.dim; ++j) {
      QVector lhs = mat * src.basis_bracket(i, j);
      QVector rhs = tgt.bracket(mat.col(i), mat.col(j));
      if (!(lhs == rhs)) return "bracket not preserved at (" + src.name(i) + "," + src.name(j) + ")";
    }
  return std::nullopt;
}

inline bool is_lie_automorphism(const LieAlgebra& l, const QMatrix& mat) {
  return inverse(mat).has_value() && !lie_hom_witness(l, l, mat).has_value();
}

inline std::optional<std::string> derivation_witness(const LieAlgebra& l, const QMatrix& d) {
  if (d.rows() != static_cast<std::size_t>(l.dim) || d.cols() != static_cast<std::size_t>(l.dim))
    return "matrix shape mismatch";
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j) {
      QVector lhs = d * l.basis_bracket(i, j);
      QVector rhs = qvec_add(l.bracket(d.col(i), qvec_unit(l.dim, j)), l.bracket(qvec_unit(l.dim, i), d.col(j)));
      if (!(lhs == rhs)) return "Leibniz fails at (" + l.name(i) + "," + l.name(j) + ")";
    }
  return std::nullopt;
}

/// Canonical basis of Der(L), matrices flattened row-major.
inline std::vector<QMatrix> lie_derivations(const LieAlgebra& l) {
  int n = l.dim;
  if (n == 0) return {};
  std::vector<QVector> rows;
  // Unknowns D_{rs} at index r*n+s; D e_i is column i.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector row(n * n, Rat(0));
        const QVector& cij = l.basis_bracket(i, j);
        for (int a = 0; a < n; ++a) {
          if (cij[a] != 0) row[k * n + a] += cij[a];           // D([e_i,e_j])_k
          row[a * n + i] -= l.basis_bracket(a, j)[k];          // -[D e_i, e_j]_k
          row[a * n + j] -= l.basis_bracket(i, a)[k];          // -[e_i, D e_j]_k
        }
        if (!qvec_is_zero(row)) rows.push_back(row);
      }
  std::vector<QVector> basis =
      rows.empty() ? Subspace::full(n * n).basis() : nullspace(QMatrix::from_rows(rows, n * n));
  std::vector<QMatrix> out;
  for (const auto& v : basis) {
    QMatrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) m.at(r, s) = v[r * n + s];
    out.push_back(m);
  }
  return out;
}

/// {x : [x, s] = 0 for every basis vector s of S}.
inline Subspace lie_centralizer(const LieAlgebra& l, const Subspace& s) {
  int n = l.dim;
  std::vector<QVector> rows;
  for (const auto& sv : s.basis())
    for (int k = 0; k < n; ++k) {
      QVector row(n, Rat(0));
      for (int i = 0; i < n; ++i) row[i] = l.bracket(qvec_unit(n, i), sv)[k];
      if (!qvec_is_zero(row)) rows.push_back(row);
    }
  if (rows.empty()) return Subspace::full(n);
  return Subspace::span_of(nullspace(QMatrix::from_rows(rows, n)), n);
}

inline bool subspace_bracket_closed(const LieAlgebra& l, const Subspace& s) {
  for (const auto& v : s.basis())
    for (const auto& w : s.basis())
      if (!s.contains(l.bracket(v, w))) return false;
  return true;
}

/// Semidirect sum M x| L along nu : L -> Der(M), with the bracket
/// [(m1,l1),(m2,l2)] = ([m1,m2] + nu(l1)m2 - nu(l2)m1, [l1,l2]).
/// M-basis vectors come first in the result.
inline LieAlgebra semidirect_lie(const LieAlgebra& m, const LieAlgebra& l,
                                 const std::vector<QMatrix>& nu) {
  if (static_cast<int>(nu.size()) != l.dim) throw input_error("semidirect: need one derivation per L-basis vector");
  for (int i = 0; i < l.dim; ++i)
    if (auto w = derivation_witness(m, nu[i]))
      throw input_error("semidirect: nu(" + l.name(i) + ") is not a derivation: " + *w);
  auto nu_of = [&](const QVector& x) {
    QMatrix r(m.dim, m.dim);
    for (int i = 0; i < l.dim; ++i)
      if (x[i] != 0) r = r + nu[i].scaled(x[i]);
    return r;
  };
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j) {
      QMatrix lhs = nu_of(l.basis_bracket(i, j));
      QMatrix rhs = nu[i] * nu[j] - nu[j] * nu[i];
      if (!(lhs == rhs))
        throw input_error("semidirect: nu is not a Lie morphism at (" + l.name(i) + "," + l.name(j) + ")");
    }
  int n = m.dim + l.dim;
  std::vector<std::string> names = m.names;
  names.insert(names.end(), l.names.begin(), l.names.end());
  std::map<std::pair<int, int>, QVector> br;
  auto pad = [&](const QVector& mv, const QVector& lv) {
    QVector v(n, Rat(0));
    for (int i = 0; i < m.dim; ++i) v[i] = mv[i];
    for (int i = 0; i < l.dim; ++i) v[m.dim + i] = lv[i];
    return v;
  };
  for (int i = 0; i < m.dim; ++i)
    for (int j = i + 1; j < m.dim; ++j) br[{i, j}] = pad(m.basis_bracket(i, j), qvec_zero(l.dim));
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < l.dim; ++j)
      br[{i, m.dim + j}] = pad(qvec_scale(Rat(-1), nu[j].col(i)), qvec_zero(l.dim));
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j) br[{m.dim + i, m.dim + j}] = pad(qvec_zero(m.dim), l.basis_bracket(i, j));
  return lie_from_structure_constants(names, br);
}

/// Smallest ideal containing span(S): iterate [L, I] to a fixed point.
inline Subspace ideal_closure(const LieAlgebra& l, const Subspace& s) {
  Subspace cur = s;
  while (true) {
    std::vector<QVector> extra = cur.basis();
    for (int i = 0; i < l.dim; ++i)
      for (const auto& v : cur.basis()) extra.push_back(l.bracket(qvec_unit(l.dim, i), v));
    Subspace next = Subspace::span_of(extra, l.dim);
    if (next.dim() == cur.dim()) return next;
    cur = next;
  }
}

struct LieQuotient {
  LieAlgebra algebra;
  QMatrix projection;  // quotient dim x ambient dim
  Subspace ideal;
  std::vector<int> rep_cols;  // ambient coordinates representing the quotient basis
};

/// L / <S> for the ideal closure of span(S). Quotient coordinates are the
/// non-pivot columns of the ideal's echelon basis.
inline LieQuotient quotient_by_ideal_closure(const LieAlgebra& l, const std::vector<QVector>& spanning) {
  Subspace i = ideal_closure(l, Subspace::span_of(spanning, l.dim));
  std::vector<bool> is_pivot(l.dim, false);
  for (const auto& row : i.basis()) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    is_pivot[p] = true;
  }
  std::vector<int> rep_cols;
  std::vector<std::string> names;
  for (int j = 0; j < l.dim; ++j)
    if (!is_pivot[j]) {
      rep_cols.push_back(j);
      names.push_back(l.name(j));
    }
  int q = static_cast<int>(rep_cols.size());
  QMatrix proj(q, l.dim);
  for (int j = 0; j < l.dim; ++j) {
    QVector r = i.reduce(qvec_unit(l.dim, j));
    for (int a = 0; a < q; ++a) proj.at(a, j) = r[rep_cols[a]];
  }
  std::map<std::pair<int, int>, QVector> br;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      QVector v = proj * l.basis_bracket(rep_cols[a], rep_cols[b]);
      if (!qvec_is_zero(v)) br[{a, b}] = v;
    }
  LieQuotient out;
  try {
    out.algebra = lie_from_structure_constants(names, br);
  } catch (const Error& e) {
    throw internal_error(std::string("ideal quotient produced an invalid algebra: ") + e.what());
  }
  out.projection = proj;
  out.ideal = i;
  out.rep_cols = rep_cols;
  return out;
}

/// Section of the quotient projection: quotient basis to representatives.
inline QMatrix quotient_section(const LieQuotient& q, int ambient_dim) {
  QMatrix s(ambient_dim, q.rep_cols.size());
  for (std::size_t a = 0; a < q.rep_cols.size(); ++a) s.at(q.rep_cols[a], a) = 1;
  return s;
}

}  // namespace hopf
