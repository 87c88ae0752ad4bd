#include <doctest.h>

#include "lietriple/liealg.hpp"
#include "lietriple/rmatrix.hpp"
#include "test_support.hpp"

using namespace lietriple;

TEST_CASE("brackets") {
  LieAlgebra g = sl2_algebra();
  const Space& s = g.space();
  Vec h = Vec::basis(s, 0), e = Vec::basis(s, 1), f = Vec::basis(s, 2);
  CHECK(g.bracket(e, f) == h);
  CHECK(g.bracket(h, e) == Scalar(2) * e);

  testing::ScalarGen gen;
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = gen.vec(s);
    CHECK(g.bracket(x, x).is_zero());
  }
  Space as = Space::make("ab2", {"a", "b"});
  LieAlgebra ab = LieAlgebra::abelian(as);
  CHECK(ab.bracket(gen.vec(as), gen.vec(as)).is_zero());
}

TEST_CASE("lie algebra verification") {
  CHECK(verify_lie_algebra(sl2_algebra()).ok());
  CHECK(verify_lie_algebra(sl3_algebra()).ok());
  CHECK(verify_lie_algebra(LieAlgebra::abelian(Space::make("a", {"x", "y"}))).ok());

  // A single broken antisymmetry entry is listed, not thrown.
  Space s = Space::make("bad", {"a", "b", "c"});
  std::vector<Scalar> c(27);
  c[(0 * 3 + 1) * 3 + 2] = Scalar(1); // c[0][1][2] without the mirror entry
  LieAlgebra bad = LieAlgebra::unchecked(s, std::move(c));
  VerificationReport rep = verify_lie_algebra(bad);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations()[0].check == "antisymmetry");
  CHECK_THROWS_AS(LieAlgebra::make(s, std::vector<Scalar>(27, Scalar(1))), ConstructionError);
}

TEST_CASE("coboundary cobracket of the textbook sl2") {
  QuasitriangularBialgebra q = testing::sl2_textbook();
  const Space& s = q.space();
  CHECK(q.cob().of_basis(0).is_zero()); // delta h = 0

  Vec h = Vec::basis(s, 0), e = Vec::basis(s, 1), f = Vec::basis(s, 2);
  Tensor2 expect_e = Scalar(1, 2) * (tensor_of(e, h) - tensor_of(h, e));
  CHECK(q.cob().of_basis(1) == expect_e);

  // Brute-force oracle: the cobracket is the adjoint action applied to r.
  for (int i = 0; i < 3; ++i)
    CHECK(q.cob().of_basis(i) == ad_extend(q.alg(), Vec::basis(s, i), q.r()));
}

TEST_CASE("bialgebra verification") {
  QuasitriangularBialgebra q = testing::sl2_textbook();
  CHECK(verify_bialgebra(q.bialg()).ok());

  // Perturb one cobracket entry: the compatibility check reports it.
  const int n = 3;
  std::vector<Scalar> d(27);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) d[(i * 3 + j) * 3 + k] = q.cob().d(i, j, k);
  d[(1 * 3 + 1) * 3 + 0] += Scalar(1);
  d[(1 * 3 + 0) * 3 + 1] -= Scalar(1); // keep anticocommutativity
  LieBialgebra broken = LieBialgebra::unchecked(
      q.alg(), LieCobracket::unchecked(q.space(), std::move(d)));
  CHECK_FALSE(verify_bialgebra(broken).ok());

  LieBialgebra zero_cob =
      LieBialgebra::unchecked(sl2_algebra(), LieCobracket::zero(q.space()));
  CHECK(verify_bialgebra(zero_cob).ok());
}

TEST_CASE("dualisation") {
  QuasitriangularBialgebra q = testing::sl2_textbook();
  LieBialgebra dual = dualize(q.bialg());
  CHECK(verify_bialgebra(dual).ok()); // 3-dim solvable bialgebra
  LieBialgebra again = dualize(dual);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        CHECK(again.alg().c(i, j, k) == q.alg().c(i, j, k));
        CHECK(again.cob().d(i, j, k) == q.cob().d(i, j, k));
      }

  Space as = Space::make("ab2", {"a", "b"});
  LieBialgebra ab =
      LieBialgebra::make(LieAlgebra::abelian(as), LieCobracket::zero(as));
  LieBialgebra abdual = dualize(ab);
  CHECK(verify_bialgebra(abdual).ok());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) CHECK(abdual.alg().c(i, j, k).is_zero());

  // Involution across the whole catalog, up to the starred labels.
  for (const auto& entry : catalog()) {
    LieBialgebra twice = dualize(dualize(entry.bialg));
    const int n = entry.bialg.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          CHECK(twice.alg().c(i, j, k) == entry.bialg.alg().c(i, j, k));
          CHECK(twice.cob().d(i, j, k) == entry.bialg.cob().d(i, j, k));
        }
  }
}

TEST_CASE("opposite algebra") {
  LieAlgebra g = sl2_algebra();
  LieAlgebra op = opposite(g);
  const Space& s = g.space();
  CHECK(op.bracket(Vec::basis(s, 1), Vec::basis(s, 2)) == -Vec::basis(s, 0));
  LieAlgebra original = opposite(op);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(original.c(i, j, k) == g.c(i, j, k));
  Space as = Space::make("ab2", {"a", "b"});
  LieAlgebra ab = LieAlgebra::abelian(as);
  CHECK(opposite(ab) == ab);
}

TEST_CASE("killing form") {
  LieAlgebra g = sl2_algebra();
  LinearMap k = killing_form(g);
  CHECK(killing_pair(k, 0, 0) == Scalar(8)); // K(h,h)
  CHECK(killing_pair(k, 1, 2) == Scalar(4)); // K(e,f)
  CHECK(killing_pair(k, 2, 1) == Scalar(4));
  CHECK(killing_pair(k, 0, 1) == Scalar(0));
  CHECK(k.rank() == 3); // nondegenerate for a semisimple algebra

  // Invariance: K([x,y],z) + K(y,[x,z]) = 0 on all basis triples.
  auto pair_vec = [&](const Vec& a, const Vec& b) {
    Scalar out(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out += a.coeff(i) * b.coeff(j) * killing_pair(k, i, j);
    return out;
  };
  const Space& s = g.space();
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        Scalar lhs = pair_vec(g.bracket_basis(x, y), Vec::basis(s, z));
        Scalar rhs = pair_vec(Vec::basis(s, y), g.bracket_basis(x, z));
        CHECK(lhs + rhs == Scalar(0));
      }

  LinearMap k2 = killing_form(axb_algebra());
  CHECK(killing_pair(k2, 0, 0) == Scalar(1));
  CHECK(k2.rank() == 1); // degenerate

  CHECK(killing_form(LieAlgebra::abelian(Space::make("a", {"x"}))).rank() == 0);
}

TEST_CASE("homomorphism checks") {
  LieAlgebra g = sl2_algebra();
  CHECK(check_homomorphism(LinearMap::identity(g.space()), g, g).ok());
  CHECK(check_homomorphism(LinearMap::zero(g.space(), g.space()), g, g).ok());
  // Negation is an anti-homomorphism on a non-abelian algebra.
  LinearMap neg = LinearMap::identity(g.space()).scaled(Scalar(-1));
  CHECK_FALSE(check_homomorphism(neg, g, g).ok());
  // Composites of homomorphisms pass.
  LinearMap doubled = LinearMap::identity(g.space()).scaled(Scalar(2));
  CHECK_FALSE(check_homomorphism(doubled, g, g).ok()); // scaling is not one
  CHECK(check_homomorphism(neg.compose(neg), g, g).ok());
}

TEST_CASE("exact rank and inverse") {
  Space s = Space::make("v", {"a", "b", "c"});
  CHECK(LinearMap::identity(s).rank() == 3);
  CHECK(LinearMap::zero(s, s).rank() == 0);
  QuasitriangularBialgebra q = testing::sl2_textbook();
  LinearMap qmap = tensor_as_map(q.q());
  CHECK(qmap.rank() == 3);
  LinearMap inv = qmap.inverse();
  CHECK(inv.compose(qmap) == LinearMap::identity(q.space().dual()));
  CHECK_THROWS_AS(LinearMap::zero(s, s).inverse(), PreconditionError);
}

TEST_CASE("change of basis reproduces the compact form") {
  LieAlgebra sl2 = sl2_algebra();
  Space s = Space::make("su2", {"u1", "u2", "u3"});
  Scalar mi2 = Scalar::imaginary(-1, 2);
  std::vector<std::vector<Scalar>> basis = {
      {Scalar(0), mi2, mi2},
      {Scalar(0), Scalar(-1, 2), Scalar(1, 2)},
      {mi2, Scalar(0), Scalar(0)},
  };
  LieAlgebra su2 = change_of_basis(sl2, s, basis);
  CHECK(su2.bracket(Vec::basis(s, 0), Vec::basis(s, 1)) == Vec::basis(s, 2));
  CHECK(su2.bracket(Vec::basis(s, 1), Vec::basis(s, 2)) == Vec::basis(s, 0));
  CHECK(su2.bracket(Vec::basis(s, 2), Vec::basis(s, 0)) == Vec::basis(s, 1));
}
