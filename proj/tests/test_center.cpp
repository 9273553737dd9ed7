#include "catch2/catch_amalgamated.hpp"
#include "corpus.hpp"
#include "hopf/center.hpp"

using namespace hopf;

namespace {

HopfSubalgebra ka3_in_ks3(const CgkmmHopf& ks3) {
  std::vector<int> a3 = subgroup_closure(ks3.group, {ks3.group.gens[0]});
  return subalgebra_make(ks3, a3, Subspace(0));
}

HopfSubalgebra uz_in_uh3(const CgkmmHopf& uh3) {
  return subalgebra_make(uh3, {0}, Subspace::span_of({{Rat(0), Rat(0), Rat(1)}}, 3));
}

}  // namespace

TEST_CASE("normality: generator conditions agree with the adjoint oracle") {
  CgkmmHopf ks3 = corpus::ks3();
  REQUIRE(is_normal(ks3, ka3_in_ks3(ks3), 3).normal);

  // a transposition subgroup is not normal, with witness
  std::vector<int> flip = subgroup_closure(ks3.group, {ks3.group.gens[1]});
  NormalityReport r = is_normal(ks3, subalgebra_make(ks3, flip, Subspace(0)), 3);
  REQUIRE(!r.normal);
  REQUIRE(!r.witness.empty());

  // (A, A) is always normal
  for (const auto& h : corpus::all()) REQUIRE(is_normal(h, full_subalgebra(h), 2).normal);

  // the kernel line of the sign extension is normal
  CgkmmHopf sg = corpus::sign_ext();
  REQUIRE(is_normal(sg, subalgebra_make(sg, {0}, Subspace::full(1)), 3).normal);
}

TEST_CASE("conjugation actions") {
  // A = K[S3], H = K[A3]: s . r = r^{-1} for the 3-cycle r
  CgkmmHopf ks3 = corpus::ks3();
  ConjugationAction conj = conjugation_action(ks3, ka3_in_ks3(ks3));
  REQUIRE(verify_action_axioms(conj.action, 3).ok);
  int s_label = ks3.group.gens[1];
  int r_label = ks3.group.gens[0];
  // r sits at position 1 of the subgroup {0, r, r^2}
  HopfElement img = action_evaluate(conj.action, he_grouplike(ks3, s_label),
                                    he_grouplike(conj.carrier.algebra, 1));
  REQUIRE(img == he_grouplike(conj.carrier.algebra, conj.carrier.algebra.group.inv[1]));
  REQUIRE(ks3.group.conj(s_label, r_label) == ks3.group.inv[r_label]);

  // abelian group algebra: conjugation is trivial
  CgkmmHopf kc4 = corpus::kc4();
  ConjugationAction cj4 = conjugation_action(kc4, full_subalgebra(kc4));
  for (int g = 0; g < 4; ++g) REQUIRE(cj4.action.grp[g] == HopfAutomorphism::identity(cj4.carrier.algebra));

  // A = U(h3), H = U(span z): x . z = xz - zx = 0
  CgkmmHopf uh3 = corpus::uh3();
  ConjugationAction cz = conjugation_action(uh3, uz_in_uh3(uh3));
  REQUIRE(verify_action_axioms(cz.action, 3).ok);
  HopfElement res = action_evaluate(cz.action, he_primitive(uh3, 0), he_primitive(cz.carrier.algebra, 0));
  REQUIRE(res.empty());

  // conjugation actions pass the axiom sweep on (A, A) for the corpus
  for (const auto& h : corpus::all()) {
    ConjugationAction ca = conjugation_action(h, full_subalgebra(h));
    VerifyResult r = verify_action_axioms(ca.action, 2);
    INFO(r.check << " at " << r.witness);
    REQUIRE(r.ok);
  }
}

TEST_CASE("centralizers") {
  CgkmmHopf ks3 = corpus::ks3();
  CentralizerResult c1 = centralizer(ks3, ka3_in_ks3(ks3), 3);
  REQUIRE(c1.certification.ok);
  std::vector<int> a3 = subgroup_closure(ks3.group, {ks3.group.gens[0]});
  REQUIRE(c1.ker_grp == a3);
  REQUIRE(c1.ker_lie.dim() == 0);

  // (A, trivial) -> A
  CgkmmHopf sg = corpus::sign_ext();
  CentralizerResult c2 = centralizer(sg, trivial_subalgebra(sg), 3);
  REQUIRE(c2.subalgebra.same_subobject(full_subalgebra(sg)));

  // (U(h3), U(h3)) -> U(span z)
  CgkmmHopf uh3 = corpus::uh3();
  CentralizerResult c3 = centralizer(uh3, full_subalgebra(uh3), 3);
  REQUIRE(c3.ker_grp == std::vector<int>{0});
  REQUIRE(c3.ker_lie.dim() == 1);
  REQUIRE(c3.ker_lie.contains({Rat(0), Rat(0), Rat(1)}));

  // non-normal subalgebra is rejected
  std::vector<int> flip = subgroup_closure(ks3.group, {ks3.group.gens[1]});
  REQUIRE_THROWS_AS(centralizer(ks3, subalgebra_make(ks3, flip, Subspace(0)), 3), Error);
}

TEST_CASE("centralizers certify against the brute-force commutant on the corpus") {
  for (const auto& a : corpus::all()) {
    // (A, A) and (A, trivial) for every corpus algebra
    REQUIRE(centralizer(a, full_subalgebra(a), 3).certification.ok);
    REQUIRE(centralizer(a, trivial_subalgebra(a), 3).certification.ok);
  }
  // plus the named proper pairs
  CgkmmHopf ks3 = corpus::ks3();
  REQUIRE(centralizer(ks3, ka3_in_ks3(ks3), 3).certification.ok);
  CgkmmHopf uh3 = corpus::uh3();
  REQUIRE(centralizer(uh3, uz_in_uh3(uh3), 3).certification.ok);
  CgkmmHopf sg = corpus::sign_ext();
  REQUIRE(centralizer(sg, subalgebra_make(sg, {0}, Subspace::full(1)), 3).certification.ok);
}

TEST_CASE("centers") {
  CentralizerResult z1 = center(corpus::ks3(), 3);
  REQUIRE(z1.subalgebra.same_subobject(trivial_subalgebra(corpus::ks3())));

  CentralizerResult z2 = center(corpus::uh3(), 3);
  REQUIRE(z2.ker_lie.dim() == 1);

  CentralizerResult z3 = center(corpus::kc4(), 3);
  REQUIRE(z3.subalgebra.same_subobject(full_subalgebra(corpus::kc4())));
}

TEST_CASE("computed centralizers are normal; centers are characteristic") {
  // every computed centralizer passes is_normal
  CgkmmHopf ks3 = corpus::ks3();
  CentralizerResult c1 = centralizer(ks3, ka3_in_ks3(ks3), 3);
  REQUIRE(is_normal(ks3, c1.subalgebra, 3).normal);
  CgkmmHopf uh3 = corpus::uh3();
  CentralizerResult c3 = centralizer(uh3, full_subalgebra(uh3), 3);
  REQUIRE(is_normal(uh3, c3.subalgebra, 3).normal);

  // characteristic center: for normal embeddings H <| E, the image of Z(H)
  // is normal in E
  struct Embedding {
    CgkmmHopf e;
    HopfSubalgebra h;
  };
  std::vector<Embedding> embeddings;
  embeddings.push_back({ks3, ka3_in_ks3(ks3)});
  embeddings.push_back({uh3, uz_in_uh3(uh3)});
  CgkmmHopf sg = corpus::sign_ext();
  embeddings.push_back({sg, subalgebra_make(sg, {0}, Subspace::full(1))});
  CgkmmHopf sm = corpus::kc3_rtimes_kc2();
  embeddings.push_back({sm, subalgebra_make(sm, {0, 1, 2}, Subspace(0))});
  for (const auto& [e, h] : embeddings) {
    MaterializedSub mat = materialize_subalgebra(h);
    CentralizerResult zh = center(mat.algebra, 3);
    // push the subobject forward along the inclusion
    std::vector<int> img_group;
    for (int k : zh.ker_grp) img_group.push_back(mat.group_embedding[k]);
    std::sort(img_group.begin(), img_group.end());
    std::vector<QVector> img_vecs;
    for (const auto& v : zh.ker_lie.basis()) img_vecs.push_back(mat.inclusion.alpha * v);
    HopfSubalgebra image = subalgebra_make(e, img_group, Subspace::span_of(img_vecs, e.lie.dim));
    REQUIRE(is_normal(e, image, 3).normal);
  }
}

TEST_CASE("hz_compare: categorical center equals the Hopf-algebra center") {
  // U(h3): graded dimensions (1,1,1,1)
  HzReport r = hz_compare(corpus::uh3(), 3);
  REQUIRE(r.equal);
  REQUIRE(r.dims_center == std::vector<int>{1, 1, 1, 1});
  REQUIRE(r.dims_hz == std::vector<int>{1, 1, 1, 1});

  // K[S3]: trivial, but Z_alg is the 3-dimensional class-sum span
  HzReport r2 = hz_compare(corpus::ks3(), 3);
  REQUIRE(r2.equal);
  REQUIRE(r2.dims_hz == std::vector<int>{1, 0, 0, 0});
  REQUIRE(r2.dims_zalg == std::vector<int>{3, 0, 0, 0});

  // abelian: everything is central
  HzReport r3 = hz_compare(corpus::kc4(), 3);
  REQUIRE(r3.equal);
  REQUIRE(r3.dims_zalg == std::vector<int>{4, 0, 0, 0});
  REQUIRE(r3.dims_hz == std::vector<int>{4, 0, 0, 0});

  // the whole corpus
  for (const auto& a : corpus::all()) REQUIRE(hz_compare(a, 3).equal);
}
