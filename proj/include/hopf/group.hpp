#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopf/error.hpp"
#include "hopf/matrix.hpp"
#include "hopf/rational.hpp"

namespace hopf {

/// Permutation of {0..degree-1}. Text form uses 1-based cycles.
struct Permutation {
  std::vector<int> img;

  int degree() const { return static_cast<int>(img.size()); }
  int apply(int i) const { return img[i]; }

  static Permutation identity(int degree) {
    Permutation p;
    p.img.resize(degree);
    for (int i = 0; i < degree; ++i) p.img[i] = i;
    return p;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  /// (p * q)(i) = p(q(i)): q acts first.
  Permutation operator*(const Permutation& q) const {
    Permutation r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[i] = img[q.img[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<int>(i);
    return r;
  }

  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }

  bool is_bijection() const {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
      if (v < 0 || v >= degree() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  std::string cycle_string() const {
    std::vector<bool> done(img.size(), false);
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (done[i] || img[i] == static_cast<int>(i)) continue;
      any = true;
      os << "(";
      std::size_t j = i;
      bool first = true;
      while (!done[j]) {
        done[j] = true;
        os << (first ? "" : " ") << (j + 1);
        first = false;
        j = img[j];
      }
      os << ")";
    }
    return any ? os.str() : "()";
  }
};

/// Parses one or more 1-based cycles, e.g. "(1 2 3)(4 5)"; "()" is the
/// identity. Juxtaposed cycles compose with the rightmost acting first.
inline Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<Permutation> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw input_error("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> pts;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) ++i;
      if (start == i) throw input_error("bad cycle notation: " + text);
      int p = std::stoi(text.substr(start, i - start));
      if (p < 1 || p > degree) throw input_error("cycle point out of range 1.." + std::to_string(degree) + ": " + std::to_string(p));
      pts.push_back(p - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    Permutation c = Permutation::identity(degree);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      int from = pts[k];
      int to = pts[(k + 1) % pts.size()];
      c.img[from] = to;
    }
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        if (pts[a] == pts[b]) throw input_error("repeated point in cycle: " + text);
    cycles.push_back(c);
    skip_ws();
  }
  Permutation r = Permutation::identity(degree);
  for (const auto& c : cycles) r = r * c;
  return r;
}

/// Finite group as a dense Cayley table. Label 0 is the identity.
struct GroupTable {
  int order = 1;
  std::vector<int> mul{0};
  std::vector<int> inv{0};
  std::vector<std::string> names{"e"};
  std::vector<Permutation> perms;  // permutation images when built from one
  std::vector<int> gens;           // labels of defining generators

  int op(int a, int b) const { return mul[a * order + b]; }
  int inverse_of(int a) const { return inv[a]; }

  int conj(int g, int h) const { return op(op(g, h), inv[g]); }

  int element_order(int g) const {
    int n = 1, x = g;
    while (x != 0) {
      x = op(x, g);
      ++n;
    }
    return n;
  }

  std::string name(int g) const {
    return g < static_cast<int>(names.size()) ? names[g] : ("g" + std::to_string(g));
  }

  bool operator==(const GroupTable& o) const { return order == o.order && mul == o.mul; }
  bool operator!=(const GroupTable& o) const { return !(*this == o); }

  static GroupTable trivial() { return GroupTable{}; }
};

/// Closure of permutation generators, breadth-first from the identity with
/// generators taken in input order. Labels follow discovery order.
inline GroupTable group_from_generators(int degree, const std::vector<Permutation>& generators,
                                        std::size_t size_bound = 1000000) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw input_error("generator degree mismatch");
    if (!g.is_bijection()) throw input_error("generator is not a bijection");
  }
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<std::vector<int>, int> index{{elems[0].img, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : generators) {
      Permutation w = elems[head] * s;
      if (index.emplace(w.img, static_cast<int>(elems.size())).second) {
        elems.push_back(w);
        if (elems.size() > size_bound)
          throw input_error("group closure exceeds size bound " + std::to_string(size_bound));
      }
    }
  }
  GroupTable t;
  t.order = static_cast<int>(elems.size());
  t.mul.assign(t.order * t.order, 0);
  t.inv.assign(t.order, 0);
  t.names.clear();
  t.perms = elems;
  for (int a = 0; a < t.order; ++a) {
    t.names.push_back(elems[a].cycle_string());
    for (int b = 0; b < t.order; ++b) t.mul[a * t.order + b] = index.at((elems[a] * elems[b]).img);
    t.inv[a] = index.at(elems[a].inverse().img);
  }
  for (const auto& s : generators) t.gens.push_back(index.at(s.img));
  return t;
}

inline std::optional<int> find_element_by_perm(const GroupTable& g, const Permutation& p) {
  for (int i = 0; i < g.order; ++i)
    if (i < static_cast<int>(g.perms.size()) && g.perms[i] == p) return i;
  return std::nullopt;
}

/// Table sanity: identity, inverses, associativity. Associativity is checked
/// on all triples up to order 64 and on a fixed pseudo-random sample beyond.
inline std::optional<std::string> validate_group(const GroupTable& g) {
  int n = g.order;
  if (n <= 0 || static_cast<int>(g.mul.size()) != n * n || static_cast<int>(g.inv.size()) != n)
    return "malformed table sizes";
  for (int v : g.mul)
    if (v < 0 || v >= n) return "table entry out of range";
  for (int a = 0; a < n; ++a) {
    if (g.op(0, a) != a || g.op(a, 0) != a) return "label 0 is not a two-sided identity at " + std::to_string(a);
    if (g.op(a, g.inv[a]) != 0 || g.op(g.inv[a], a) != 0) return "inverse table fails at " + std::to_string(a);
  }
  auto check = [&](int a, int b, int c) -> bool { return g.op(g.op(a, b), c) == g.op(a, g.op(b, c)); };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!check(a, b, c))
            return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int k = 0; k < 200000; ++k) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      int a = static_cast<int>((state >> 16) % n);
      int b = static_cast<int>((state >> 32) % n);
      int c = static_cast<int>((state >> 48) % n);
      if (!check(a, b, c))
        return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    }
  }
  return std::nullopt;
}

inline std::vector<int> subgroup_closure(const GroupTable& g, std::vector<int> seed) {
  std::vector<bool> in(g.order, false);
  in[0] = true;
  std::vector<int> work{0};
  for (int s : seed) {
    if (s < 0 || s >= g.order) throw input_error("subgroup seed label out of range");
    if (!in[s]) {
      in[s] = true;
      work.push_back(s);
    }
  }
  for (std::size_t head = 0; head < work.size(); ++head) {
    int a = work[head];
    int ia = g.inv[a];
    if (!in[ia]) {
      in[ia] = true;
      work.push_back(ia);
    }
    for (std::size_t j = 0; j < work.size(); ++j) {
      for (int p : {g.op(a, work[j]), g.op(work[j], a)}) {
        if (!in[p]) {
          in[p] = true;
          work.push_back(p);
        }
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < g.order; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

inline bool is_subgroup(const GroupTable& g, const std::vector<int>& sorted_labels) {
  std::vector<bool> in(g.order, false);
  for (int x : sorted_labels) in[x] = true;
  if (!in[0]) return false;
  for (int a : sorted_labels) {
    if (!in[g.inv[a]]) return false;
    for (int b : sorted_labels)
      if (!in[g.op(a, b)]) return false;
  }
  return true;
}

/// Subgroup relabelled 0..k-1 in ambient label order, with the embedding.
inline std::pair<GroupTable, std::vector<int>> subgroup_table(const GroupTable& g,
                                                              const std::vector<int>& sorted_labels) {
  if (!is_subgroup(g, sorted_labels)) throw input_error("label set is not a subgroup");
  int k = static_cast<int>(sorted_labels.size());
  std::vector<int> pos(g.order, -1);
  for (int i = 0; i < k; ++i) pos[sorted_labels[i]] = i;
  GroupTable t;
  t.order = k;
  t.mul.assign(k * k, 0);
  t.inv.assign(k, 0);
  t.names.clear();
  for (int i = 0; i < k; ++i) {
    t.names.push_back(g.name(sorted_labels[i]));
    if (!g.perms.empty()) t.perms.push_back(g.perms[sorted_labels[i]]);
    t.inv[i] = pos[g.inv[sorted_labels[i]]];
    for (int j = 0; j < k; ++j) t.mul[i * k + j] = pos[g.op(sorted_labels[i], sorted_labels[j])];
  }
  return {t, sorted_labels};
}

/// {g : gs = sg for all s in S}; always a subgroup.
inline std::vector<int> group_centralizer_labels(const GroupTable& g, const std::vector<int>& s) {
  std::vector<int> out;
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int y : s)
      if (g.op(x, y) != g.op(y, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

inline std::optional<std::pair<int, int>> normality_witness(const GroupTable& g,
                                                            const std::vector<int>& sub) {
  std::vector<bool> in(g.order, false);
  for (int x : sub) in[x] = true;
  for (int a = 0; a < g.order; ++a)
    for (int h : sub)
      if (!in[g.conj(a, h)]) return std::make_pair(a, h);
  return std::nullopt;
}

/// Quotient by a normal subgroup. Cosets are labelled by ascending minimal
/// representative, so the trivial coset is label 0.
inline std::pair<GroupTable, std::vector<int>> quotient_group(const GroupTable& g,
                                                              const std::vector<int>& normal_sub) {
  if (normality_witness(g, normal_sub)) throw input_error("subgroup is not normal");
  std::vector<int> coset_min(g.order, -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order; ++a) {
    if (coset_min[a] != -1) continue;
    for (int h : normal_sub) coset_min[g.op(a, h)] = a;
    reps.push_back(a);
  }
  std::vector<int> proj(g.order);
  std::map<int, int> rep_index;
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);
  for (int a = 0; a < g.order; ++a) proj[a] = rep_index.at(coset_min[a]);
  int k = static_cast<int>(reps.size());
  GroupTable q;
  q.order = k;
  q.mul.assign(k * k, 0);
  q.inv.assign(k, 0);
  q.names.clear();
  for (int i = 0; i < k; ++i) {
    q.names.push_back("[" + g.name(reps[i]) + "]");
    q.inv[i] = proj[g.inv[reps[i]]];
    for (int j = 0; j < k; ++j) q.mul[i * k + j] = proj[g.op(reps[i], reps[j])];
  }
  return {q, proj};
}

/// Group automorphism as a permutation of labels.
struct GroupAut {
  Permutation perm;

  int apply(int g) const { return perm.apply(g); }
  GroupAut compose(const GroupAut& o) const { return GroupAut{perm * o.perm}; }
  GroupAut inverse() const { return GroupAut{perm.inverse()}; }
  bool operator==(const GroupAut& o) const { return perm == o.perm; }
  bool operator<(const GroupAut& o) const { return perm < o.perm; }
};

inline std::optional<std::string> automorphism_witness(const GroupTable& g, const Permutation& f) {
  if (f.degree() != g.order || !f.is_bijection()) return "not a bijection of labels";
  if (f.apply(0) != 0) return "does not fix the identity";
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (f.apply(g.op(a, b)) != g.op(f.apply(a), f.apply(b)))
        return "not multiplicative at (" + g.name(a) + "," + g.name(b) + ")";
  return std::nullopt;
}

inline GroupAut conjugation_aut(const GroupTable& g, int by) {
  Permutation p;
  p.img.resize(g.order);
  for (int h = 0; h < g.order; ++h) p.img[h] = g.conj(by, h);
  return GroupAut{p};
}

/// Irredundant generating set: exhaustive minimal search for small orders,
/// greedy otherwise.
inline std::vector<int> minimal_generating_set(const GroupTable& g) {
  if (g.order == 1) return {};
  if (g.order <= 64) {
    for (std::size_t k = 1; k <= 4; ++k) {
      std::vector<int> pick(k, 0);
      std::function<std::optional<std::vector<int>>(std::size_t, int)> rec =
          [&](std::size_t slot, int from) -> std::optional<std::vector<int>> {
        if (slot == k) {
          if (static_cast<int>(subgroup_closure(g, pick).size()) == g.order) return pick;
          return std::nullopt;
        }
        for (int c = from; c < g.order; ++c) {
          pick[slot] = c;
          if (auto r = rec(slot + 1, c + 1)) return r;
        }
        return std::nullopt;
      };
      if (auto r = rec(0, 1)) return *r;
    }
  }
  std::vector<int> gens;
  std::vector<int> span{0};
  while (static_cast<int>(span.size()) < g.order) {
    int best = -1;
    std::size_t best_size = span.size();
    for (int c = 1; c < g.order; ++c) {
      std::vector<int> trial = gens;
      trial.push_back(c);
      std::size_t sz = subgroup_closure(g, trial).size();
      if (sz > best_size) {
        best = c;
        best_size = sz;
      }
    }
    if (best < 0) throw internal_error("generating set search stalled");
    gens.push_back(best);
    span = subgroup_closure(g, gens);
  }
  return gens;
}

namespace detail {

/// Backtracks over images of `gens`; calls sink(f) for every map that
/// extends to a homomorphism G -> H (as a full label map).
template <typename Sink>
void search_homomorphisms(const GroupTable& g, const GroupTable& h, const std::vector<int>& gens,
                          bool require_bijective, Sink&& sink) {
  if (gens.empty()) {
    std::vector<int> f(g.order, 0);
    if (!require_bijective || g.order == h.order) sink(f);
    return;
  }
  // Elements of G as words in the generators along a closure traversal.
  std::vector<int> parent(g.order, -1), via(g.order, -1);
  std::vector<int> bfs{0};
  std::vector<bool> seen(g.order, false);
  seen[0] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int w = g.op(bfs[head], gens[i]);
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = bfs[head];
        via[w] = static_cast<int>(i);
        bfs.push_back(w);
      }
    }
  if (static_cast<int>(bfs.size()) != g.order) throw internal_error("not a generating set");

  std::vector<int> orders(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) orders[i] = g.element_order(gens[i]);
  std::vector<int> img(gens.size(), -1);

  std::function<void(std::size_t)> rec = [&](std::size_t slot) {
    if (slot == gens.size()) {
      std::vector<int> f(g.order, -1);
      f[0] = 0;
      for (std::size_t b = 1; b < bfs.size(); ++b) {
        int w = bfs[b];
        f[w] = h.op(f[parent[w]], img[via[w]]);
      }
      for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
          if (f[g.op(a, b)] != h.op(f[a], f[b])) return;
      if (require_bijective) {
        std::vector<bool> hit(h.order, false);
        for (int v : f) {
          if (hit[v]) return;
          hit[v] = true;
        }
      }
      sink(f);
      return;
    }
    for (int c = 0; c < h.order; ++c) {
      int oc = h.element_order(c);
      if (require_bijective ? oc != orders[slot] : orders[slot] % oc != 0) continue;
      img[slot] = c;
      rec(slot + 1);
    }
  };
  rec(0);
}

}  // namespace detail

/// Complete automorphism list via images of a minimal generating set.
inline std::vector<GroupAut> enumerate_automorphisms(const GroupTable& g, int order_bound = 512) {
  if (g.order > order_bound)
    throw math_error("automorphism enumeration infeasible: order " + std::to_string(g.order) +
                     " exceeds bound " + std::to_string(order_bound));
  std::vector<int> gens = minimal_generating_set(g);
  std::vector<GroupAut> out;
  detail::search_homomorphisms(g, g, gens, true, [&](const std::vector<int>& f) {
    Permutation p;
    p.img = f;
    out.push_back(GroupAut{p});
  });
  return out;
}

inline std::vector<std::vector<int>> all_homomorphisms(const GroupTable& g, const GroupTable& h) {
  std::vector<int> gens = minimal_generating_set(g);
  std::vector<std::vector<int>> out;
  detail::search_homomorphisms(g, h, gens, false, [&](const std::vector<int>& f) { out.push_back(f); });
  return out;
}

inline std::optional<std::vector<int>> find_group_isomorphism(const GroupTable& g, const GroupTable& h) {
  if (g.order != h.order) return std::nullopt;
  std::vector<int> gens = minimal_generating_set(g);
  std::optional<std::vector<int>> found;
  detail::search_homomorphisms(g, h, gens, true, [&](const std::vector<int>& f) {
    if (!found) found = f;
  });
  return found;
}

/// Semidirect product N x| M for tau : M -> Aut(N). Pair (n, m) has label
/// m*|N| + n, so (0,0) is the identity and N embeds as the first block.
inline GroupTable semidirect_group(const GroupTable& n, const GroupTable& m,
                                   const std::vector<GroupAut>& tau) {
  if (static_cast<int>(tau.size()) != m.order) throw input_error("semidirect: need one automorphism per element of M");
  for (int i = 0; i < m.order; ++i)
    if (auto w = automorphism_witness(n, tau[i].perm))
      throw input_error("semidirect: tau(" + m.name(i) + ") is not an automorphism: " + *w);
  if (!tau[0].perm.is_identity()) throw input_error("semidirect: tau(identity) must be the identity");
  for (int a = 0; a < m.order; ++a)
    for (int b = 0; b < m.order; ++b)
      if (!(tau[a].compose(tau[b]) == tau[m.op(a, b)]))
        throw input_error("semidirect: tau not multiplicative at (" + m.name(a) + "," + m.name(b) + ")");
  int order = n.order * m.order;
  GroupTable t;
  t.order = order;
  t.mul.assign(order * order, 0);
  t.inv.assign(order, 0);
  t.names.clear();
  auto label = [&](int nn, int mm) { return mm * n.order + nn; };
  for (int m1 = 0; m1 < m.order; ++m1)
    for (int n1 = 0; n1 < n.order; ++n1) {
      int a = label(n1, m1);
      t.names.push_back("(" + n.name(n1) + "," + m.name(m1) + ")");
      for (int m2 = 0; m2 < m.order; ++m2)
        for (int n2 = 0; n2 < n.order; ++n2)
          t.mul[a * order + label(n2, m2)] = label(n.op(n1, tau[m1].apply(n2)), m.op(m1, m2));
    }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (t.mul[a * order + b] == 0) {
        t.inv[a] = b;
        break;
      }
  return t;
}

/// Rational linear representation: one matrix per group label.
struct LinearRep {
  int dim = 0;
  std::vector<QMatrix> mats;

  const QMatrix& operator[](int g) const { return mats[g]; }

  bool operator==(const LinearRep& o) const { return dim == o.dim && mats == o.mats; }

  static LinearRep trivial(int group_order, int dim) {
    LinearRep r;
    r.dim = dim;
    r.mats.assign(group_order, QMatrix::identity(dim));
    return r;
  }
};

inline std::optional<std::string> linear_rep_witness(const GroupTable& g, const LinearRep& rep) {
  if (static_cast<int>(rep.mats.size()) != g.order) return "wrong number of matrices";
  for (const auto& m : rep.mats)
    if (m.rows() != static_cast<std::size_t>(rep.dim) || m.cols() != static_cast<std::size_t>(rep.dim))
      return "matrix dimension mismatch";
  if (!(rep.mats[0] == QMatrix::identity(rep.dim))) return "identity does not map to the identity matrix";
  for (int a = 0; a < g.order; ++a) {
    if (!inverse(rep.mats[a])) return "matrix for " + g.name(a) + " is singular";
    for (int b = 0; b < g.order; ++b)
      if (!(rep.mats[a] * rep.mats[b] == rep.mats[g.op(a, b)]))
        return "not multiplicative at (" + g.name(a) + "," + g.name(b) + ")";
  }
  return std::nullopt;
}

/// Extends generator images along a closure traversal, then validates.
inline LinearRep rep_from_generator_images(const GroupTable& g,
                                           const std::vector<std::pair<int, QMatrix>>& images, int dim) {
  std::vector<int> gens;
  for (const auto& [lbl, mat] : images) {
    gens.push_back(lbl);
    if (mat.rows() != static_cast<std::size_t>(dim) || mat.cols() != static_cast<std::size_t>(dim))
      throw input_error("representation matrix has wrong shape");
  }
  if (static_cast<int>(subgroup_closure(g, gens).size()) != g.order)
    throw input_error("representation images do not cover a generating set");
  LinearRep rep;
  rep.dim = dim;
  rep.mats.assign(g.order, QMatrix());
  std::vector<bool> have(g.order, false);
  rep.mats[0] = QMatrix::identity(dim);
  have[0] = true;
  std::vector<int> bfs{0};
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (const auto& [lbl, mat] : images) {
      int w = g.op(bfs[head], lbl);
      if (!have[w]) {
        have[w] = true;
        rep.mats[w] = rep.mats[bfs[head]] * mat;
        bfs.push_back(w);
      }
    }
  if (auto w = linear_rep_witness(g, rep)) throw input_error("invalid representation: " + *w);
  return rep;
}

/// Basis of Z^1(G, V) = {d : d(gh) = d(g) + g d(h)}, flattened with one
/// dim-block per group label (the identity block is forced to zero).
inline std::vector<QVector> cocycle_space(const GroupTable& g, const LinearRep& rep) {
  if (auto w = linear_rep_witness(g, rep)) throw input_error("invalid representation: " + *w);
  int n = g.order, dim = rep.dim;
  int vars = n * dim;
  std::vector<QVector> rows;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.op(a, b);
      for (int k = 0; k < dim; ++k) {
        QVector row(vars, Rat(0));
        row[ab * dim + k] += 1;
        row[a * dim + k] -= 1;
        for (int j = 0; j < dim; ++j)
          if (rep.mats[a].at(k, j) != 0) row[b * dim + j] -= rep.mats[a].at(k, j);
        if (!qvec_is_zero(row)) rows.push_back(row);
      }
    }
  if (rows.empty()) {
    Subspace s = Subspace::full(vars);
    return s.basis();
  }
  return nullspace(QMatrix::from_rows(rows, vars));
}

}  // namespace hopf
