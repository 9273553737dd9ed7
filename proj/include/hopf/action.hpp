#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/derivation.hpp"
#include "hopf/morphism.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Actions of B on A, stored structurally: grouplikes act by Hopf
// automorphisms, primitives by Hopf derivations
// ---------------------------------------------------------------------------

struct HopfAction {
  CgkmmHopf actor;   // B
  CgkmmHopf target;  // A
  std::vector<HopfAutomorphism> grp;  // one per G_B label
  std::vector<HopfDerivation> lie;    // one per L_B basis vector

  bool operator==(const HopfAction& o) const {
    return actor == o.actor && target == o.target && grp == o.grp && lie == o.lie;
  }
};

inline HopfAction trivial_action(const CgkmmHopf& b, const CgkmmHopf& a) {
  HopfAction act{b, a, {}, {}};
  act.grp.assign(b.group.order, HopfAutomorphism::identity(a));
  act.lie.assign(b.lie.dim, HopfDerivation::zero(a));
  return act;
}

inline HopfDerivation derivation_combination(const CgkmmHopf& a, const std::vector<HopfDerivation>& basis,
                                             const QVector& coeffs) {
  HopfDerivation out = HopfDerivation::zero(a);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) out = derivation_add(out, basis[i], coeffs[i]);
  return out;
}

/// Structural invariants of an action:
///  - every grouplike image is a Hopf automorphism, multiplicatively;
///  - every primitive image is a Hopf derivation;
///  - composition rule psi_{[y,y']} = psi_{y'} o psi_y - psi_y o psi_{y'}
///    (products of primitives act through Axiom 2, which fixes this
///    orientation given [u,v] = vu - uv on primitives);
///  - conjugation compatibility psi_{tau_B(g) y} = phi_g . psi_y.
inline std::optional<std::string> action_witness(const HopfAction& act) {
  const CgkmmHopf& b = act.actor;
  const CgkmmHopf& a = act.target;
  if (static_cast<int>(act.grp.size()) != b.group.order) return "need one automorphism per grouplike";
  if (static_cast<int>(act.lie.size()) != b.lie.dim) return "need one derivation per primitive basis vector";
  for (int g = 0; g < b.group.order; ++g)
    if (auto w = hopf_automorphism_witness(a, act.grp[g].alpha, act.grp[g].beta))
      return "grouplike " + b.group.name(g) + ": " + *w;
  if (!(act.grp[0] == HopfAutomorphism::identity(a))) return "identity grouplike must act trivially";
  for (int g = 0; g < b.group.order; ++g)
    for (int k = 0; k < b.group.order; ++k)
      if (!(aut_compose(act.grp[g], act.grp[k]) == act.grp[b.group.op(g, k)]))
        return "grouplike part not multiplicative at (" + b.group.name(g) + "," + b.group.name(k) + ")";
  for (int i = 0; i < b.lie.dim; ++i)
    if (auto w = hopf_derivation_witness(a, act.lie[i]))
      return "primitive " + b.lie.name(i) + ": " + *w;
  for (int i = 0; i < b.lie.dim; ++i)
    for (int j = i + 1; j < b.lie.dim; ++j) {
      HopfDerivation lhs = derivation_combination(a, act.lie, b.lie.basis_bracket(i, j));
      HopfDerivation rhs = derivation_bracket(a, act.lie[j], act.lie[i]);
      if (!(lhs == rhs))
        return "Lie part violates the composition rule at (" + b.lie.name(i) + "," + b.lie.name(j) + ")";
    }
  for (int g = 0; g < b.group.order; ++g)
    for (int i = 0; i < b.lie.dim; ++i) {
      HopfDerivation lhs = derivation_combination(a, act.lie, b.tau_of(g).col(i));
      HopfDerivation rhs = conjugate_derivation(a, act.grp[g], act.lie[i]);
      if (!(lhs == rhs))
        return "conjugation compatibility fails at (g=" + b.group.name(g) + ", y=" + b.lie.name(i) + ")";
    }
  return std::nullopt;
}

inline HopfAction action_make(CgkmmHopf b, CgkmmHopf a, std::vector<HopfAutomorphism> grp,
                              std::vector<HopfDerivation> lie) {
  HopfAction act{std::move(b), std::move(a), std::move(grp), std::move(lie)};
  if (auto w = action_witness(act)) throw input_error("invalid action: " + *w);
  return act;
}

/// b . a for a basis element b = y_1^{k_1}...y_n^{k_n} g of B: apply the
/// automorphism of g, then the derivations right-to-left (Axiom 2).
inline HopfElement action_evaluate_basis(const HopfAction& act, const BasisElem& b, const HopfElement& a) {
  HopfElement cur = apply_automorphism(act.target, act.grp[b.second], a);
  std::vector<int> word = monomial_word(b.first);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = apply_derivation(act.target, act.lie[*it], cur);
  return cur;
}

inline HopfElement action_evaluate(const HopfAction& act, const HopfElement& b, const HopfElement& a) {
  HopfElement out;
  for (const auto& [bb, c] : b) he_add(out, action_evaluate_basis(act, bb, a), c);
  return out;
}

// ---------------------------------------------------------------------------
// Module-Hopf-algebra axiom verification
// ---------------------------------------------------------------------------

/// Evaluator abstraction so raw (non-structural) actions can be probed by
/// the same sweep; the negative tests rely on this hook.
using ActionEvaluator = std::function<HopfElement(const BasisElem&, const BasisElem&)>;

inline ActionEvaluator structural_evaluator(const HopfAction& act) {
  return [act](const BasisElem& b, const BasisElem& a) {
    return action_evaluate_basis(act, b, he_basis(act.target, a.first, a.second));
  };
}

inline HopfElement eval_elements(const ActionEvaluator& eval, const HopfElement& b, const HopfElement& a) {
  HopfElement out;
  for (const auto& [bb, cb] : b)
    for (const auto& [ab, ca] : a) he_add(out, eval(bb, ab), cb * ca);
  return out;
}

/// The six module-Hopf-algebra axioms, checked exactly on all basis pairs of
/// degree <= d. Reports the first failing axiom with its witness.
inline VerifyResult verify_action_axioms(const CgkmmHopf& b, const CgkmmHopf& a,
                                         const ActionEvaluator& eval, int d) {
  if (d < 1) throw input_error("degree bound must be >= 1");
  std::vector<BasisElem> bbasis = enumerate_basis(b, d);
  std::vector<BasisElem> abasis = enumerate_basis(a, d);
  HopfElement one_a = he_unit(a);
  BasisElem unit_b{Monomial(b.lie.dim, 0), 0};

  for (const auto& ab : abasis) {
    HopfElement ae = he_basis(a, ab.first, ab.second);
    if (eval(unit_b, ab) != ae)
      return VerifyResult::fail("axiom 1 (unit acts trivially)", basis_to_string(a, ab));
  }

  for (const auto& bb : bbasis) {
    HopfElement be = he_basis(b, bb.first, bb.second);
    // Axiom 4
    HopfElement lhs4 = eval_elements(eval, be, one_a);
    HopfElement rhs4 = he_scaled(one_a, hopf_counit(b, be));
    if (lhs4 != rhs4) return VerifyResult::fail("axiom 4 (action on the unit)", basis_to_string(b, bb));
    for (const auto& ab : abasis) {
      HopfElement ae = he_basis(a, ab.first, ab.second);
      HopfElement ba = eval(bb, ab);
      // Axiom 5
      Tensor2 lhs5 = hopf_coproduct(a, ba);
      Tensor2 rhs5;
      for (const auto& [pb, cb] : hopf_coproduct(b, be))
        for (const auto& [pa, ca] : hopf_coproduct(a, ae)) {
          HopfElement left = eval(pb.first, pa.first);
          HopfElement right = eval(pb.second, pa.second);
          Rat c = cb * ca;
          for (const auto& [l, cl] : left)
            for (const auto& [r, cr] : right) t2_add_term(rhs5, l, r, c * cl * cr);
        }
      if (lhs5 != rhs5)
        return VerifyResult::fail("axiom 5 (comultiplicativity)",
                                  basis_to_string(b, bb) + " . " + basis_to_string(a, ab));
      // Axiom 6
      if (hopf_counit(a, ba) != hopf_counit(b, be) * hopf_counit(a, ae))
        return VerifyResult::fail("axiom 6 (counit compatibility)",
                                  basis_to_string(b, bb) + " . " + basis_to_string(a, ab));
    }
  }

  // Axiom 2: (b b') . a = b . (b' . a); pairs of total degree <= d
  for (const auto& b1 : bbasis)
    for (const auto& b2 : bbasis) {
      if (monomial_degree(b1.first) + monomial_degree(b2.first) > d) continue;
      HopfElement prod = hopf_mul(b, he_basis(b, b1.first, b1.second), he_basis(b, b2.first, b2.second));
      for (const auto& ab : abasis) {
        HopfElement ae = he_basis(a, ab.first, ab.second);
        HopfElement lhs = eval_elements(eval, prod, ae);
        HopfElement rhs;
        for (const auto& [t, c] : eval(b2, ab)) he_add(rhs, eval_elements(eval, he_basis(b, b1.first, b1.second), [&] {
                                                         HopfElement e;
                                                         e.emplace(t, Rat(1));
                                                         return e;
                                                       }()),
                                                       c);
        if (lhs != rhs)
          return VerifyResult::fail("axiom 2 (multiplicativity in B)",
                                    basis_to_string(b, b1) + ", " + basis_to_string(b, b2) + " on " +
                                        basis_to_string(a, ab));
      }
    }

  // Axiom 3: b . (a a') = (b_1 . a)(b_2 . a'); pairs of total degree <= d
  for (const auto& bb : bbasis) {
    Tensor2 db = hopf_coproduct(b, he_basis(b, bb.first, bb.second));
    for (const auto& a1 : abasis)
      for (const auto& a2 : abasis) {
        if (monomial_degree(a1.first) + monomial_degree(a2.first) > d) continue;
        HopfElement prod = hopf_mul(a, he_basis(a, a1.first, a1.second), he_basis(a, a2.first, a2.second));
        HopfElement lhs = eval_elements(eval, he_basis(b, bb.first, bb.second), prod);
        HopfElement rhs;
        for (const auto& [pb, c] : db) {
          HopfElement left = eval(pb.first, a1);
          HopfElement right = eval(pb.second, a2);
          he_add(rhs, hopf_mul(a, left, right), c);
        }
        if (lhs != rhs)
          return VerifyResult::fail("axiom 3 (multiplicativity in A)",
                                    basis_to_string(b, bb) + " on " + basis_to_string(a, a1) + ", " +
                                        basis_to_string(a, a2));
      }
  }

  return VerifyResult::pass();
}

inline VerifyResult verify_action_axioms(const HopfAction& act, int d) {
  return verify_action_axioms(act.actor, act.target, structural_evaluator(act), d);
}

// ---------------------------------------------------------------------------
// Smash products and split extensions
// ---------------------------------------------------------------------------

struct SplitExtension {
  CgkmmHopf kernel_algebra;    // A
  CgkmmHopf total;             // E
  CgkmmHopf quotient_algebra;  // B
  HopfMorphism k;              // A -> E
  HopfMorphism f;              // E -> B
  HopfMorphism s;              // B -> E
  HopfAction action;           // induced action of B on A
};

/// A x| B in CGKMM coordinates. The group is G_A x| G_B, the Lie algebra is
/// L_A (+) L_B with [x, y] = delta_y(x) for x in L_A, y in L_B, and the pair
/// (n, m) acts on L_A by tau_A(n) alpha_m and on L_B by
/// y -> tau_B(m) y - d_{tau_B(m) y}(n).
inline SplitExtension smash_product(const HopfAction& act) {
  const CgkmmHopf& a = act.target;
  const CgkmmHopf& b = act.actor;
  int na = a.lie.dim, nb = b.lie.dim;

  std::vector<GroupAut> gtau;
  for (int m = 0; m < b.group.order; ++m) gtau.push_back(act.grp[m].beta);
  GroupTable egroup = semidirect_group(a.group, b.group, gtau);

  std::vector<std::string> names = a.lie.names;
  names.insert(names.end(), b.lie.names.begin(), b.lie.names.end());
  std::map<std::pair<int, int>, QVector> br;
  auto pad_a = [&](const QVector& v) {
    QVector r(na + nb, Rat(0));
    for (int i = 0; i < na; ++i) r[i] = v[i];
    return r;
  };
  auto pad_b = [&](const QVector& v) {
    QVector r(na + nb, Rat(0));
    for (int i = 0; i < nb; ++i) r[na + i] = v[i];
    return r;
  };
  for (int i = 0; i < na; ++i)
    for (int j = i + 1; j < na; ++j) br[{i, j}] = pad_a(a.lie.basis_bracket(i, j));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) br[{i, na + j}] = pad_a(act.lie[j].delta.col(i));
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) br[{na + i, na + j}] = pad_b(b.lie.basis_bracket(i, j));
  LieAlgebra elie;
  try {
    elie = lie_from_structure_constants(names, br);
  } catch (const Error& e) {
    throw internal_error(std::string("smash Lie algebra invalid: ") + e.what());
  }

  LinearRep etau;
  etau.dim = na + nb;
  for (int m = 0; m < b.group.order; ++m)
    for (int n = 0; n < a.group.order; ++n) {
      QMatrix t(na + nb, na + nb);
      QMatrix aa = a.tau_of(n) * act.grp[m].alpha;  // L_A block
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) t.at(i, j) = aa.at(i, j);
      const QMatrix& bb = b.tau_of(m);
      for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) t.at(na + i, na + j) = bb.at(i, j);
      // mixed block: column for y_j gets -d_{tau_B(m) y_j}(n)
      for (int j = 0; j < nb; ++j) {
        QVector dvals = qvec_zero(na);
        for (int k = 0; k < nb; ++k)
          if (bb.at(k, j) != 0) dvals = qvec_add(dvals, qvec_scale(bb.at(k, j), act.lie[k].d[n]));
        for (int i = 0; i < na; ++i) t.at(i, na + j) = -dvals[i];
      }
      etau.mats.push_back(t);  // label order: m * |G_A| + n
    }

  CgkmmHopf total;
  try {
    total = make_cgkmm(egroup, elie, etau);
  } catch (const Error& e) {
    throw internal_error(std::string("smash product is not a Hopf algebra: ") + e.what());
  }

  QMatrix ka(na + nb, na);
  for (int i = 0; i < na; ++i) ka.at(i, i) = 1;
  std::vector<int> kb(a.group.order);
  for (int n = 0; n < a.group.order; ++n) kb[n] = n;  // (n, 0)

  QMatrix sa(na + nb, nb);
  for (int i = 0; i < nb; ++i) sa.at(na + i, i) = 1;
  std::vector<int> sb(b.group.order);
  for (int m = 0; m < b.group.order; ++m) sb[m] = m * a.group.order;  // (0, m)

  QMatrix fa(nb, na + nb);
  for (int i = 0; i < nb; ++i) fa.at(i, na + i) = 1;
  std::vector<int> fb(egroup.order);
  for (int m = 0; m < b.group.order; ++m)
    for (int n = 0; n < a.group.order; ++n) fb[m * a.group.order + n] = m;

  SplitExtension ext;
  ext.kernel_algebra = a;
  ext.total = total;
  ext.quotient_algebra = b;
  try {
    ext.k = morphism_make(a, total, ka, kb);
    ext.s = morphism_make(b, total, sa, sb);
    ext.f = morphism_make(total, b, fa, fb);
  } catch (const Error& e) {
    throw internal_error(std::string("smash structural morphism invalid: ") + e.what());
  }
  ext.action = act;
  return ext;
}

/// The canonical sequence 0 -> U(L) -> H -> K[G] -> 0 of the CGKMM
/// presentation; the projection kills positive PBW degree.
inline SplitExtension cgkmm_split_sequence(const CgkmmHopf& h) {
  CgkmmHopf a = u_of_lie(h.lie);
  HopfAction act{k_of_group(h.group), a, {}, {}};
  for (int g = 0; g < h.group.order; ++g)
    act.grp.push_back(HopfAutomorphism{h.tau_of(g), GroupAut{Permutation::identity(1)}});
  if (auto w = action_witness(act)) throw internal_error("canonical action invalid: " + *w);
  SplitExtension ext = smash_product(act);
  // The smash of the canonical action is coordinate-identical to h itself.
  if (!(ext.total == h)) throw internal_error("canonical smash differs from the algebra");
  ext.total = h;
  return ext;
}

/// Recovers the action of B on A from a split extension: grouplikes act by
/// conjugation with s-images, primitives by the mixed bracket and the
/// grouplike commutator, all pulled back along k.
inline HopfAction extract_action(const CgkmmHopf& a, const CgkmmHopf& b, const HopfMorphism& k,
                                 const HopfMorphism& f, const HopfMorphism& s) {
  const CgkmmHopf& e = k.tgt;
  // preimage lookup for the (injective) group part of k
  std::vector<int> pre(e.group.order, -1);
  for (int n = 0; n < a.group.order; ++n) pre[k.beta[n]] = n;
  QMatrix kcols = k.alpha;  // columns span the kernel Lie part
  auto pull_back = [&](const QVector& w) {
    auto x = solve(kcols, w);
    if (!x) throw math_error("extension value leaves the kernel image");
    return *x;
  };
  HopfAction act;
  act.actor = b;
  act.target = a;
  for (int g = 0; g < b.group.order; ++g) {
    int sg = s.beta[g];
    Permutation beta;
    beta.img.resize(a.group.order);
    for (int n = 0; n < a.group.order; ++n) {
      int img = e.group.conj(sg, k.beta[n]);
      if (img < 0 || pre[img] < 0) throw math_error("conjugation leaves the kernel subgroup");
      beta.img[n] = pre[img];
    }
    QMatrix alpha(a.lie.dim, a.lie.dim);
    for (int i = 0; i < a.lie.dim; ++i) {
      QVector w = e.tau_of(sg) * k.alpha.col(i);
      QVector x = pull_back(w);
      for (int j = 0; j < a.lie.dim; ++j) alpha.at(j, i) = x[j];
    }
    act.grp.push_back(HopfAutomorphism{alpha, GroupAut{beta}});
  }
  for (int j = 0; j < b.lie.dim; ++j) {
    HopfDerivation der = HopfDerivation::zero(a);
    QVector sy = s.alpha.col(j);
    for (int i = 0; i < a.lie.dim; ++i) {
      QVector w = e.lie.bracket(k.alpha.col(i), sy);  // [x, y] = delta_y(x)
      QVector x = pull_back(w);
      for (int r = 0; r < a.lie.dim; ++r) der.delta.at(r, i) = x[r];
    }
    for (int n = 0; n < a.group.order; ++n) {
      QVector w = qvec_sub(sy, e.tau_of(k.beta[n]) * sy);  // (id - tau(n)) s(y)
      der.d[n] = pull_back(w);
    }
    act.lie.push_back(der);
  }
  if (auto w = action_witness(act)) throw math_error("extension does not induce a valid action: " + *w);
  return act;
}

/// Full split-extension verification: section law, two-sided kernel
/// certification, and reconstruction via the induced action up to the
/// canonical isomorphism (which is the identity pair on smash outputs).
inline VerifyResult verify_split_extension(const SplitExtension& ext, int d) {
  const CgkmmHopf& a = ext.kernel_algebra;
  const CgkmmHopf& b = ext.quotient_algebra;
  const CgkmmHopf& e = ext.total;
  if (auto w = morphism_witness(a, e, ext.k.alpha, ext.k.beta))
    return VerifyResult::fail("kernel morphism", *w);
  if (auto w = morphism_witness(e, b, ext.f.alpha, ext.f.beta))
    return VerifyResult::fail("projection morphism", *w);
  if (auto w = morphism_witness(b, e, ext.s.alpha, ext.s.beta))
    return VerifyResult::fail("section morphism", *w);
  if (!morphism_injective(ext.k)) return VerifyResult::fail("kernel morphism", "not injective");
  if (!morphism_surjective(ext.f)) return VerifyResult::fail("projection morphism", "not surjective");
  if (!compose_morphisms(ext.f, ext.s).same_maps(identity_morphism(b)))
    return VerifyResult::fail("section law", "f o s is not the identity of B");

  KernelResult kr = hopf_kernel(ext.f, d);
  if (!kr.certification.ok) return kr.certification;
  std::vector<int> img_group;
  for (int n = 0; n < a.group.order; ++n) img_group.push_back(ext.k.beta[n]);
  std::sort(img_group.begin(), img_group.end());
  std::vector<QVector> img_cols;
  for (int i = 0; i < a.lie.dim; ++i) img_cols.push_back(ext.k.alpha.col(i));
  Subspace img_lie = Subspace::span_of(img_cols, e.lie.dim);
  if (!(kr.kernel.subgroup == img_group) || !(kr.kernel.sublie == img_lie))
    return VerifyResult::fail("kernel identification", "HKer(f) differs from the image of k");

  HopfAction induced;
  try {
    induced = extract_action(a, b, ext.k, ext.f, ext.s);
  } catch (const Error& err) {
    return VerifyResult::fail("induced action", err.what());
  }
  SplitExtension smashed;
  try {
    smashed = smash_product(induced);
  } catch (const Error& err) {
    return VerifyResult::fail("induced smash", err.what());
  }
  // canonical isomorphism omega : A x| B -> E, (a (x) b) -> k(a) s(b)
  QMatrix oal(e.lie.dim, a.lie.dim + b.lie.dim);
  for (int i = 0; i < a.lie.dim; ++i)
    for (int r = 0; r < e.lie.dim; ++r) oal.at(r, i) = ext.k.alpha.at(r, i);
  for (int i = 0; i < b.lie.dim; ++i)
    for (int r = 0; r < e.lie.dim; ++r) oal.at(r, a.lie.dim + i) = ext.s.alpha.at(r, i);
  std::vector<int> obe(smashed.total.group.order);
  for (int m = 0; m < b.group.order; ++m)
    for (int n = 0; n < a.group.order; ++n)
      obe[m * a.group.order + n] = e.group.op(ext.k.beta[n], ext.s.beta[m]);
  if (auto w = morphism_witness(smashed.total, e, oal, obe))
    return VerifyResult::fail("canonical comparison morphism", *w);
  HopfMorphism omega{smashed.total, e, oal, obe};
  if (!morphism_injective(omega) || !morphism_surjective(omega))
    return VerifyResult::fail("canonical comparison morphism", "not an isomorphism");
  if (!compose_morphisms(omega, smashed.k).same_maps(ext.k))
    return VerifyResult::fail("canonical comparison", "omega o i1 differs from k");
  if (!compose_morphisms(omega, smashed.s).same_maps(ext.s))
    return VerifyResult::fail("canonical comparison", "omega o i2 differs from s");
  if (!compose_morphisms(ext.f, omega).same_maps(smashed.f))
    return VerifyResult::fail("canonical comparison", "f o omega differs from p2");
  return VerifyResult::pass();
}

// ---------------------------------------------------------------------------
// Morphism recombination between smash products
// ---------------------------------------------------------------------------

class CompatibilityError : public Error {
 public:
  explicit CompatibilityError(const std::string& what) : Error(Kind::math, what) {}
};

/// Compatibility f(y . x) = g(y) . f(x) on generator pairs; nullopt if it
/// holds, otherwise a witness description.
inline std::optional<std::string> compatibility_witness(const HopfMorphism& f, const HopfMorphism& g,
                                                        const HopfAction& act_h, const HopfAction& act_f) {
  const CgkmmHopf& h1 = act_h.target;
  const CgkmmHopf& h2 = act_h.actor;
  std::vector<std::pair<HopfElement, std::string>> ygens, xgens;
  for (int gg = 0; gg < h2.group.order; ++gg)
    ygens.push_back({he_grouplike(h2, gg), h2.group.name(gg)});
  for (int i = 0; i < h2.lie.dim; ++i) ygens.push_back({he_primitive(h2, i), h2.lie.name(i)});
  for (int gg = 0; gg < h1.group.order; ++gg)
    xgens.push_back({he_grouplike(h1, gg), h1.group.name(gg)});
  for (int i = 0; i < h1.lie.dim; ++i) xgens.push_back({he_primitive(h1, i), h1.lie.name(i)});
  for (const auto& [y, yname] : ygens)
    for (const auto& [x, xname] : xgens) {
      HopfElement lhs = apply_morphism(f, action_evaluate(act_h, y, x));
      HopfElement rhs = action_evaluate(act_f, apply_morphism(g, y), apply_morphism(f, x));
      if (lhs != rhs) return "f(y.x) != g(y).f(x) at (y=" + yname + ", x=" + xname + ")";
    }
  return std::nullopt;
}

/// f (x) g : H1 x| H2 -> F1 x| F2, defined exactly when f and g are
/// action-compatible.
inline HopfMorphism recombine_morphisms(const HopfMorphism& f, const HopfMorphism& g,
                                        const HopfAction& act_h, const HopfAction& act_f) {
  if (!(f.src == act_h.target) || !(g.src == act_h.actor) || !(f.tgt == act_f.target) ||
      !(g.tgt == act_f.actor))
    throw input_error("recombination carriers do not match the actions");
  if (auto w = compatibility_witness(f, g, act_h, act_f)) throw CompatibilityError(*w);
  SplitExtension eh = smash_product(act_h);
  SplitExtension ef = smash_product(act_f);
  int na_h = act_h.target.lie.dim, nb_h = act_h.actor.lie.dim;
  int na_f = act_f.target.lie.dim, nb_f = act_f.actor.lie.dim;
  QMatrix alpha(na_f + nb_f, na_h + nb_h);
  for (int i = 0; i < na_h; ++i)
    for (int r = 0; r < na_f; ++r) alpha.at(r, i) = f.alpha.at(r, i);
  for (int i = 0; i < nb_h; ++i)
    for (int r = 0; r < nb_f; ++r) alpha.at(na_f + r, na_h + i) = g.alpha.at(r, i);
  std::vector<int> beta(eh.total.group.order);
  for (int m = 0; m < act_h.actor.group.order; ++m)
    for (int n = 0; n < act_h.target.group.order; ++n)
      beta[m * act_h.target.group.order + n] =
          g.beta[m] * act_f.target.group.order + f.beta[n];
  try {
    return morphism_make(eh.total, ef.total, alpha, beta);
  } catch (const Error& e) {
    throw internal_error(std::string("recombination failed despite compatibility: ") + e.what());
  }
}

}  // namespace hopf
