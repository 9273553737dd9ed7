#include "catch2/catch_amalgamated.hpp"
#include "hopf/lie.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

LieAlgebra h3() {
  // [x, y] = z
  return lie_from_structure_constants({"x", "y", "z"}, {{{0, 1}, {Rat(0), Rat(0), Rat(1)}}});
}

}  // namespace

TEST_CASE("structure constant validation") {
  REQUIRE(h3().dim == 3);
  REQUIRE(lie_abelian({"a", "b"}).dim == 2);

  // [x,y] = x? no: the cyclic non-Jacobi table
  std::map<std::pair<int, int>, QVector> bad;
  bad[{0, 1}] = {Rat(1), Rat(0), Rat(0)};  // [x,y] = x
  bad[{1, 2}] = {Rat(0), Rat(1), Rat(0)};  // [y,z] = y
  bad[{2, 0}] = {Rat(0), Rat(0), Rat(1)};  // [z,x] = z
  REQUIRE_THROWS_WITH(lie_from_structure_constants({"x", "y", "z"}, bad),
                      Catch::Matchers::ContainsSubstring("Jacobi"));

  std::map<std::pair<int, int>, QVector> askew;
  askew[{0, 1}] = {Rat(0), Rat(0), Rat(1)};
  askew[{1, 0}] = {Rat(0), Rat(0), Rat(1)};  // should be the negative
  REQUIRE_THROWS_WITH(lie_from_structure_constants({"x", "y", "z"}, askew),
                      Catch::Matchers::ContainsSubstring("antisymmetry"));
}

TEST_CASE("derivation spaces") {
  REQUIRE(lie_derivations(lie_abelian({"a", "b"})).size() == 4);
  LieAlgebra l = h3();
  auto ders = lie_derivations(l);
  REQUIRE(ders.size() == 6);
  REQUIRE(oracle::derivation_nullity(l) == 6);
  for (const auto& d : ders) REQUIRE(!derivation_witness(l, d).has_value());
  REQUIRE(lie_derivations(LieAlgebra::zero()).empty());
}

TEST_CASE("derivations are bracket closed") {
  LieAlgebra l = h3();
  auto ders = lie_derivations(l);
  std::vector<QVector> flat;
  for (const auto& d : ders) {
    QVector v;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) v.push_back(d.at(r, c));
    flat.push_back(v);
  }
  Subspace span = Subspace::span_of(flat, 9);
  for (const auto& a : ders)
    for (const auto& b : ders) {
      QMatrix comm = a * b - b * a;
      QVector v;
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) v.push_back(comm.at(r, c));
      REQUIRE(span.contains(v));
    }
}

TEST_CASE("lie centralizers") {
  LieAlgebra l = h3();
  Subspace x_span = Subspace::span_of({{Rat(1), Rat(0), Rat(0)}}, 3);
  Subspace cz = lie_centralizer(l, x_span);
  REQUIRE(cz.dim() == 2);
  REQUIRE(cz.contains({Rat(1), Rat(0), Rat(0)}));
  REQUIRE(cz.contains({Rat(0), Rat(0), Rat(1)}));

  REQUIRE(lie_centralizer(l, Subspace(3)).dim() == 3);

  Subspace center = lie_centralizer(l, Subspace::full(3));
  REQUIRE(center.dim() == 1);
  REQUIRE(center.contains({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("semidirect lie") {
  LieAlgebra one_m = lie_abelian({"m"});
  LieAlgebra one_l = lie_abelian({"l"});
  QMatrix id1 = QMatrix::identity(1);
  LieAlgebra sd = semidirect_lie(one_m, one_l, {id1});
  REQUIRE(sd.dim == 2);
  // [m, l] = -nu(l)(m) = -m with this bracket layout
  REQUIRE(sd.basis_bracket(0, 1) == QVector{Rat(-1), Rat(0)});

  LieAlgebra direct = semidirect_lie(one_m, one_l, {QMatrix(1, 1)});
  REQUIRE(direct.basis_bracket(0, 1) == qvec_zero(2));

  LieAlgebra back = semidirect_lie(h3(), LieAlgebra::zero(), {});
  REQUIRE(back == h3());

  // restriction along both inclusions reproduces the inputs
  LieAlgebra ab2 = lie_abelian({"a", "b"});
  QMatrix rot(2, 2);
  rot.at(0, 1) = -1;
  rot.at(1, 0) = 1;
  LieAlgebra sd2 = semidirect_lie(ab2, one_l, {rot});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      QVector b = sd2.basis_bracket(i, j);
      REQUIRE(QVector(b.begin(), b.begin() + 2) == ab2.basis_bracket(i, j));
    }

  // nu that is not a Lie morphism into derivations is rejected
  LieAlgebra l2 = lie_abelian({"p", "q"});
  QMatrix a(2, 2), b(2, 2);
  a.at(0, 0) = 1;             // diag(1,0)
  b.at(0, 1) = 1;             // nilpotent
  REQUIRE_THROWS_WITH(semidirect_lie(ab2, l2, {a, b}),
                      Catch::Matchers::ContainsSubstring("not a Lie morphism"));
}

TEST_CASE("ideal closure quotients") {
  LieAlgebra l = h3();
  LieQuotient q1 = quotient_by_ideal_closure(l, {{Rat(0), Rat(0), Rat(1)}});
  REQUIRE(q1.ideal.dim() == 1);
  REQUIRE(q1.algebra.dim == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) REQUIRE(qvec_is_zero(q1.algebra.basis_bracket(i, j)));

  LieQuotient q2 = quotient_by_ideal_closure(l, {});
  REQUIRE(q2.algebra == l);
  REQUIRE(q2.projection == QMatrix::identity(3));

  LieQuotient q3 = quotient_by_ideal_closure(l, {{Rat(1), Rat(0), Rat(0)}});
  REQUIRE(q3.ideal.dim() == 2);
  REQUIRE(q3.ideal.contains({Rat(0), Rat(0), Rat(1)}));
  REQUIRE(q3.algebra.dim == 1);

  // projection is a Lie morphism and its kernel is exactly the ideal
  for (const auto& q : {q1, q3}) {
    REQUIRE(!lie_hom_witness(l, q.algebra, q.projection).has_value());
    auto ker = nullspace(q.projection);
    REQUIRE(Subspace::span_of(ker, 3) == q.ideal);
  }
}
