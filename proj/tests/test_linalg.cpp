#include "catch2/catch_amalgamated.hpp"
#include "hopf/matrix.hpp"

using namespace hopf;

TEST_CASE("rref and rank") {
  QMatrix m(3, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
  m.at(2, 0) = 0; m.at(2, 1) = 1; m.at(2, 2) = 1;
  auto pivots = rref(m);
  REQUIRE(pivots.size() == 2);
  REQUIRE(m.at(0, 0) == 1);
  REQUIRE(m.at(0, 1) == 0);
  REQUIRE(m.at(0, 2) == 1);
  REQUIRE(m.at(1, 1) == 1);
  REQUIRE(m.at(1, 2) == 1);
}

TEST_CASE("nullspace is exact and canonical") {
  QMatrix m(1, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(0, 2) = 1;
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) REQUIRE(v[0] + v[1] + v[2] == 0);
  // rref rows: leading ones in ascending pivot columns
  REQUIRE(ns[0][0] == 1);
  REQUIRE(ns[1][1] == 1);
}

TEST_CASE("inverse round trip and singular detection") {
  QMatrix a(2, 2);
  a.at(0, 0) = Rat(1, 2); a.at(0, 1) = 1;
  a.at(1, 0) = 0; a.at(1, 1) = 3;
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  REQUIRE((a * *inv) == QMatrix::identity(2));
  QMatrix s(2, 2);
  s.at(0, 0) = 1; s.at(0, 1) = 2;
  s.at(1, 0) = 2; s.at(1, 1) = 4;
  REQUIRE(!inverse(s).has_value());
}

TEST_CASE("solve") {
  QMatrix a(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 1;
  a.at(1, 0) = 0; a.at(1, 1) = 1;
  auto x = solve(a, {Rat(3), Rat(1)});
  REQUIRE(x.has_value());
  REQUIRE((*x)[0] == 2);
  REQUIRE((*x)[1] == 1);
  QMatrix b(2, 1);
  b.at(0, 0) = 1; b.at(1, 0) = 1;
  REQUIRE(!solve(b, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("subspace membership, equality, sum") {
  Subspace s = Subspace::span_of({{Rat(1), Rat(1), Rat(0)}, {Rat(2), Rat(2), Rat(0)}}, 3);
  REQUIRE(s.dim() == 1);
  REQUIRE(s.contains({Rat(-3), Rat(-3), Rat(0)}));
  REQUIRE(!s.contains({Rat(1), Rat(0), Rat(0)}));
  Subspace t = Subspace::span_of({{Rat(0), Rat(0), Rat(5)}}, 3);
  REQUIRE(s.sum(t).dim() == 2);
  Subspace s2 = Subspace::span_of({{Rat(-1), Rat(-1), Rat(0)}}, 3);
  REQUIRE(s == s2);
}
