#include "catch2/catch_amalgamated.hpp"
#include "hopf/group.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

GroupTable s3() {
  return group_from_generators(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
}
GroupTable c4() { return group_from_generators(4, {parse_cycles("(1 2 3 4)", 4)}); }
GroupTable c3() { return group_from_generators(3, {parse_cycles("(1 2 3)", 3)}); }
GroupTable c2() { return group_from_generators(2, {parse_cycles("(1 2)", 2)}); }

}  // namespace

TEST_CASE("cycle parsing and printing") {
  Permutation p = parse_cycles("(1 2 3)", 3);
  REQUIRE(p.img == std::vector<int>{1, 2, 0});
  REQUIRE(p.cycle_string() == "(1 2 3)");
  REQUIRE(parse_cycles("()", 4).is_identity());
  REQUIRE(parse_cycles("(1 2)(3 4)", 4).cycle_string() == "(1 2)(3 4)");
  REQUIRE_THROWS_AS(parse_cycles("(1 5)", 3), Error);
}

TEST_CASE("closure enumeration: S3, trivial, C4") {
  GroupTable g = s3();
  REQUIRE(g.order == 6);
  REQUIRE(!validate_group(g).has_value());
  REQUIRE(find_group_isomorphism(g, oracle::abstract_s3()).has_value());

  GroupTable t = group_from_generators(1, {});
  REQUIRE(t.order == 1);

  GroupTable c = c4();
  REQUIRE(c.order == 4);
  REQUIRE(find_group_isomorphism(c, oracle::cyclic_table(4)).has_value());
}

TEST_CASE("closure size bound is enforced") {
  REQUIRE_THROWS_AS(group_from_generators(5, {parse_cycles("(1 2 3 4 5)", 5)}, 3), Error);
}

TEST_CASE("automorphism enumeration matches brute force") {
  auto a_s3 = enumerate_automorphisms(s3());
  REQUIRE(static_cast<int>(a_s3.size()) == 6);
  REQUIRE(a_s3.size() == static_cast<std::size_t>(oracle::automorphism_count_bruteforce(s3())));

  auto a_c4 = enumerate_automorphisms(c4());
  REQUIRE(a_c4.size() == 2);
  REQUIRE(a_c4.size() == static_cast<std::size_t>(oracle::automorphism_count_bruteforce(c4())));

  auto a_triv = enumerate_automorphisms(GroupTable::trivial());
  REQUIRE(a_triv.size() == 1);
  REQUIRE(a_triv[0].perm.is_identity());
}

TEST_CASE("automorphism list is a group") {
  GroupTable g = s3();
  auto auts = enumerate_automorphisms(g);
  for (const auto& f : auts) REQUIRE(!automorphism_witness(g, f.perm).has_value());
  auto find = [&](const GroupAut& x) {
    for (const auto& f : auts)
      if (f == x) return true;
    return false;
  };
  bool has_id = false;
  for (const auto& f : auts) {
    has_id = has_id || f.perm.is_identity();
    REQUIRE(find(f.inverse()));
    for (const auto& h : auts) REQUIRE(find(f.compose(h)));
  }
  REQUIRE(has_id);
}

TEST_CASE("automorphism enumeration bound") {
  REQUIRE_THROWS_AS(enumerate_automorphisms(s3(), 4), Error);
}

TEST_CASE("group centralizers") {
  GroupTable g = s3();
  // A3 = subgroup generated by the 3-cycle
  std::vector<int> a3 = subgroup_closure(g, {g.gens[0]});
  REQUIRE(a3.size() == 3);
  auto cz = group_centralizer_labels(g, a3);
  REQUIRE(cz == a3);

  auto all = group_centralizer_labels(g, {0});
  REQUIRE(static_cast<int>(all.size()) == g.order);

  std::vector<int> whole(g.order);
  for (int i = 0; i < g.order; ++i) whole[i] = i;
  auto triv = group_centralizer_labels(g, whole);
  REQUIRE(triv == std::vector<int>{0});
}

TEST_CASE("semidirect products") {
  GroupTable n = c3(), m = c2();
  // inversion automorphism of C3
  Permutation inv_perm;
  inv_perm.img.resize(3);
  for (int i = 0; i < 3; ++i) inv_perm.img[i] = n.inv[i];
  std::vector<GroupAut> tau{GroupAut{Permutation::identity(3)}, GroupAut{inv_perm}};
  GroupTable sd = semidirect_group(n, m, tau);
  REQUIRE(sd.order == 6);
  REQUIRE(find_group_isomorphism(sd, oracle::abstract_s3()).has_value());

  // trivial action: direct product, explicit isomorphism with C6
  std::vector<GroupAut> triv{GroupAut{Permutation::identity(3)}, GroupAut{Permutation::identity(3)}};
  GroupTable dp = semidirect_group(n, m, triv);
  REQUIRE(dp.order == 6);
  REQUIRE(find_group_isomorphism(dp, oracle::cyclic_table(6)).has_value());

  GroupTable k4 = semidirect_group(c2(), c2(), {GroupAut{Permutation::identity(2)}, GroupAut{Permutation::identity(2)}});
  REQUIRE(k4.order == 4);
  for (int i = 1; i < 4; ++i) REQUIRE(k4.element_order(i) == 2);

  // non-multiplicative tau is rejected with a witness
  GroupTable c5 = group_from_generators(5, {parse_cycles("(1 2 3 4 5)", 5)});
  Permutation sq;
  sq.img.resize(5);
  for (int i = 0; i < 5; ++i) sq.img[i] = c5.op(i, i);
  REQUIRE_THROWS_WITH(semidirect_group(c5, c2(), {GroupAut{Permutation::identity(5)}, GroupAut{sq}}),
                      Catch::Matchers::ContainsSubstring("not multiplicative"));
}

TEST_CASE("quotient group S3/A3") {
  GroupTable g = s3();
  std::vector<int> a3 = subgroup_closure(g, {g.gens[0]});
  auto [q, proj] = quotient_group(g, a3);
  REQUIRE(q.order == 2);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) REQUIRE(proj[g.op(a, b)] == q.op(proj[a], proj[b]));
}

TEST_CASE("cocycle spaces") {
  GroupTable g = c2();
  LinearRep sign;
  sign.dim = 1;
  sign.mats = {QMatrix::identity(1), QMatrix::identity(1).scaled(Rat(-1))};
  auto z1 = cocycle_space(g, sign);
  REQUIRE(z1.size() == 1);

  // trivial representation on any finite group: only the zero cocycle
  auto z0 = cocycle_space(s3(), LinearRep::trivial(6, 2));
  REQUIRE(z0.empty());

  // 2-dim swap representation of C2: d(s) spans ker(I + P)
  LinearRep swap;
  swap.dim = 2;
  QMatrix p(2, 2);
  p.at(0, 1) = 1;
  p.at(1, 0) = 1;
  swap.mats = {QMatrix::identity(2), p};
  auto zs = cocycle_space(g, swap);
  REQUIRE(zs.size() == 1);
  // block for s is at coordinates 2,3; must span (1,-1)
  REQUIRE(zs[0][2] == -zs[0][3]);
  REQUIRE(zs[0][2] != 0);
  REQUIRE(zs[0][0] == 0);
  REQUIRE(zs[0][1] == 0);
  // cocycle identity holds exactly on all pairs
  auto d_of = [&](int lbl) { return QVector{zs[0][2 * lbl], zs[0][2 * lbl + 1]}; };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      QVector lhs = d_of(g.op(a, b));
      QVector rhs = qvec_add(d_of(a), swap.mats[a] * d_of(b));
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("hom enumeration") {
  REQUIRE(all_homomorphisms(c2(), c2()).size() == 2);
  REQUIRE(all_homomorphisms(c4(), c2()).size() == 2);
  REQUIRE(all_homomorphisms(c3(), c2()).size() == 1);
}
