#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace hopf {

/// Exact rational scalar. All arithmetic in the library is over Q.
using Rat = mpq_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). No floats.
inline std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  bool slash = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (slash || j + 1 == s.size()) return std::nullopt;
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      return std::nullopt;
    }
  }
  Rat q(s);
  q.canonicalize();
  if (slash && q.get_den() == 0) return std::nullopt;
  return q;
}

using QVector = std::vector<Rat>;

inline QVector qvec_zero(std::size_t n) { return QVector(n, Rat(0)); }

inline QVector qvec_unit(std::size_t n, std::size_t k) {
  QVector v(n, Rat(0));
  v[k] = 1;
  return v;
}

inline bool qvec_is_zero(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline QVector qvec_add(const QVector& a, const QVector& b) {
  QVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline QVector qvec_sub(const QVector& a, const QVector& b) {
  QVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline QVector qvec_scale(const Rat& c, const QVector& a) {
  QVector r(a);
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace hopf
