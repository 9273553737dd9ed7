#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopf/lie.hpp"
#include "hopf/rational.hpp"

namespace hopf {

/// PBW monomial e_0^{a_0} ... e_{n-1}^{a_{n-1}} as its exponent vector.
/// The zero vector is 1.
using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
  int d = 0;
  for (int a : m) d += a;
  return d;
}

/// Graded-lexicographic order; the canonical basis enumeration order.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Element of U(L): finite rational combination of PBW monomials.
/// Zero coefficients are never stored.
using UEnvElement = std::map<Monomial, Rat, GradedLex>;

inline void uenv_add_term(UEnvElement& e, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

inline void uenv_add(UEnvElement& acc, const UEnvElement& e, const Rat& scale = Rat(1)) {
  for (const auto& [m, c] : e) uenv_add_term(acc, m, scale * c);
}

inline UEnvElement uenv_one(int dim) {
  UEnvElement e;
  e.emplace(Monomial(dim, 0), Rat(1));
  return e;
}

inline UEnvElement uenv_letter(int dim, int i) {
  Monomial m(dim, 0);
  m[i] = 1;
  UEnvElement e;
  e.emplace(m, Rat(1));
  return e;
}

class StraightenCache {
 public:
  UEnvElement* find(const Monomial& m, int letter) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({m, letter});
    return it == memo_.end() ? nullptr : &it->second;
  }
  void insert(const Monomial& m, int letter, UEnvElement value) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::make_pair(m, letter), std::move(value));
  }

 private:
  std::map<std::pair<Monomial, int>, UEnvElement> memo_;
  std::mutex mu_;
};

inline StraightenCache& pbw_cache_of(const LieAlgebra& l) {
  if (!l.pbw_cache) l.pbw_cache = std::make_shared<StraightenCache>();
  return *l.pbw_cache;
}

inline UEnvElement uenv_mul_letter(const LieAlgebra& l, const UEnvElement& e, int letter);

/// Normal form of m * e_i. Rewrites e_j e_i -> e_i e_j + [e_i, e_j] for the
/// trailing letters j > i of m; memoized per algebra.
inline UEnvElement uenv_mul_monomial_letter(const LieAlgebra& l, const Monomial& m, int letter) {
  StraightenCache& cache = pbw_cache_of(l);
  if (UEnvElement* hit = cache.find(m, letter)) return *hit;
  int top = -1;
  for (int j = l.dim - 1; j > letter; --j)
    if (m[j] > 0) {
      top = j;
      break;
    }
  UEnvElement out;
  if (top < 0) {
    Monomial r = m;
    r[letter] += 1;
    out.emplace(r, Rat(1));
  } else {
    Monomial head = m;
    head[top] -= 1;  // m = head * e_top
    // m * e_i = (head * e_i) * e_top + head * [e_i, e_top]
    UEnvElement part = uenv_mul_monomial_letter(l, head, letter);
    out = uenv_mul_letter(l, part, top);
    const QVector& br = l.basis_bracket(letter, top);
    for (int k = 0; k < l.dim; ++k)
      if (br[k] != 0) {
        UEnvElement t = uenv_mul_monomial_letter(l, head, k);
        uenv_add(out, t, br[k]);
      }
  }
  cache.insert(m, letter, out);
  return out;
}

inline UEnvElement uenv_mul_letter(const LieAlgebra& l, const UEnvElement& e, int letter) {
  UEnvElement out;
  for (const auto& [m, c] : e) uenv_add(out, uenv_mul_monomial_letter(l, m, letter), c);
  return out;
}

inline UEnvElement uenv_mul_linear(const LieAlgebra& l, const UEnvElement& e, const QVector& x) {
  UEnvElement out;
  for (int k = 0; k < l.dim; ++k)
    if (x[k] != 0) uenv_add(out, uenv_mul_letter(l, e, k), x[k]);
  return out;
}

/// PBW normal form of a word in basis letters.
inline UEnvElement straighten(const LieAlgebra& l, const std::vector<int>& word) {
  UEnvElement acc = uenv_one(l.dim);
  for (int letter : word) {
    if (letter < 0 || letter >= l.dim) throw input_error("letter index out of range");
    acc = uenv_mul_letter(l, acc, letter);
  }
  return acc;
}

inline std::vector<int> monomial_word(const Monomial& m) {
  std::vector<int> w;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int k = 0; k < m[i]; ++k) w.push_back(static_cast<int>(i));
  return w;
}

inline UEnvElement uenv_mul(const LieAlgebra& l, const UEnvElement& a, const UEnvElement& b) {
  UEnvElement out;
  for (const auto& [mb, cb] : b) {
    UEnvElement acc = a;
    for (int letter : monomial_word(mb)) acc = uenv_mul_letter(l, acc, letter);
    uenv_add(out, acc, cb);
  }
  return out;
}

/// Antipode of U(L) on a monomial: reverse the word and negate each letter.
inline UEnvElement uenv_antipode_monomial(const LieAlgebra& l, const Monomial& m) {
  std::vector<int> w = monomial_word(m);
  std::reverse(w.begin(), w.end());
  UEnvElement r = straighten(l, w);
  if (monomial_degree(m) % 2 == 1) {
    UEnvElement neg;
    for (const auto& [mm, c] : r) neg.emplace(mm, -c);
    return neg;
  }
  return r;
}

/// Algebra-map extension of a linear map on letters (columns of `alpha`,
/// written over `tgt`) to U(src) -> U(tgt).
inline UEnvElement uenv_apply_linear(const LieAlgebra& src, const LieAlgebra& tgt, const QMatrix& alpha,
                                     const UEnvElement& e) {
  UEnvElement out;
  for (const auto& [m, c] : e) {
    UEnvElement acc = uenv_one(tgt.dim);
    for (int letter : monomial_word(m)) acc = uenv_mul_linear(tgt, acc, alpha.col(letter));
    uenv_add(out, acc, c);
  }
  (void)src;
  return out;
}

inline std::vector<Monomial> enumerate_monomials(int dim, int max_degree) {
  std::vector<Monomial> out;
  Monomial cur(dim, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == dim) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[pos] = a;
      rec(pos + 1, left - a);
    }
    cur[pos] = 0;
  };
  if (dim == 0) {
    out.push_back(Monomial{});
    return out;
  }
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

inline std::string monomial_to_string(const LieAlgebra& l, const Monomial& m) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < l.dim; ++i) {
    if (m[i] == 0) continue;
    if (any) os << " ";
    os << l.name(i);
    if (m[i] > 1) os << "^" << m[i];
    any = true;
  }
  return any ? os.str() : "1";
}

inline std::string uenv_to_string(const LieAlgebra& l, const UEnvElement& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e) {
    if (!first) os << " + ";
    if (!(c == 1) || monomial_degree(m) == 0) os << rat_str(c) << (monomial_degree(m) ? "*" : "");
    if (monomial_degree(m)) os << monomial_to_string(l, m);
    first = false;
  }
  return os.str();
}

}  // namespace hopf
