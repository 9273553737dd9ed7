// The fixed test corpus used across suites.
#pragma once

#include <vector>

#include "hopf/hopf.hpp"

namespace corpus {

using namespace hopf;

inline GroupTable s3_group() {
  return group_from_generators(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
}
inline GroupTable c2_group() { return group_from_generators(2, {parse_cycles("(1 2)", 2)}); }
inline GroupTable c3_group() { return group_from_generators(3, {parse_cycles("(1 2 3)", 3)}); }
inline GroupTable c4_group() { return group_from_generators(4, {parse_cycles("(1 2 3 4)", 4)}); }

inline LieAlgebra h3_lie() {
  return lie_from_structure_constants({"x", "y", "z"}, {{{0, 1}, {Rat(0), Rat(0), Rat(1)}}});
}

inline CgkmmHopf ks3() { return k_of_group(s3_group()); }
inline CgkmmHopf kc4() { return k_of_group(c4_group()); }
inline CgkmmHopf kc3() { return k_of_group(c3_group()); }
inline CgkmmHopf kc2() { return k_of_group(c2_group()); }
inline CgkmmHopf uh3() { return u_of_lie(h3_lie()); }
inline CgkmmHopf uab2() { return u_of_lie(lie_abelian({"a", "b"})); }
inline CgkmmHopf ux() { return u_of_lie(lie_abelian({"x"})); }

/// U(Qx) x| K[C2] with tau(s) = -1.
inline CgkmmHopf sign_ext() {
  LinearRep tau;
  tau.dim = 1;
  tau.mats = {QMatrix::identity(1), QMatrix::identity(1).scaled(Rat(-1))};
  return make_cgkmm(c2_group(), lie_abelian({"x"}), tau);
}

/// U(Q^2) x| K[C2] with tau(s) the coordinate swap.
inline CgkmmHopf swap_ext() {
  QMatrix p(2, 2);
  p.at(0, 1) = 1;
  p.at(1, 0) = 1;
  LinearRep tau;
  tau.dim = 2;
  tau.mats = {QMatrix::identity(2), p};
  return make_cgkmm(c2_group(), lie_abelian({"e1", "e2"}), tau);
}

/// K[C3 x| C2] for the inversion action (group isomorphic to S3, L = 0).
inline CgkmmHopf kc3_rtimes_kc2() {
  GroupTable n = c3_group();
  Permutation inv_perm;
  inv_perm.img.resize(3);
  for (int i = 0; i < 3; ++i) inv_perm.img[i] = n.inv[i];
  GroupTable sd = semidirect_group(n, c2_group(),
                                   {GroupAut{Permutation::identity(3)}, GroupAut{inv_perm}});
  return k_of_group(sd);
}

/// U(h3) x| K[C2] with tau(s) = diag(-1, -1, 1); exercises a nontrivial
/// action on a nonabelian Lie algebra.
inline CgkmmHopf uh3_rtimes_kc2() {
  QMatrix m = QMatrix::identity(3);
  m.at(0, 0) = -1;
  m.at(1, 1) = -1;
  LinearRep tau;
  tau.dim = 3;
  tau.mats = {QMatrix::identity(3), m};
  return make_cgkmm(c2_group(), h3_lie(), tau);
}

inline std::vector<CgkmmHopf> all() {
  return {ks3(), kc4(), kc3(), uh3(), uab2(), sign_ext(), swap_ext(), kc3_rtimes_kc2()};
}

inline std::vector<const char*> names() {
  return {"K[S3]", "K[C4]", "K[C3]", "U(h3)", "U(ab2)", "sign", "swap", "K[C3 x| C2]"};
}

}  // namespace corpus
