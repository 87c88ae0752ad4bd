#include <doctest.h>

#include "lietriple/constructions.hpp"
#include "lietriple/realforms.hpp"
#include "test_support.hpp"

using namespace lietriple;

TEST_CASE("half-real predicates on the compact form") {
  auto su2 = catalog_quasitriangular(*catalog_find("su2"));
  CHECK(is_half_real(su2).ok());
  CHECK(is_real_type(su2));
  CHECK(real_transmutation_check(su2).ok());
}

TEST_CASE("the split basis is not half-real") {
  QuasitriangularBialgebra sl2 = testing::sl2_textbook();
  VerificationReport rep = is_half_real(sl2);
  REQUIRE_FALSE(rep.ok()); // its cobracket is real, not imaginary
  bool cobracket_flagged = false;
  for (const auto& v : rep.violations())
    if (v.check == "cobracket-constant-imaginary") cobracket_flagged = true;
  CHECK(cobracket_flagged);

  auto ab = catalog_quasitriangular(*catalog_find("abelian2"));
  CHECK(is_half_real(ab).ok()); // zero cobracket is vacuously imaginary
  CHECK(is_real_type(ab));      // zero symmetric part is real
}

TEST_CASE("real type fails after scaling r by i") {
  auto su2 = catalog_quasitriangular(*catalog_find("su2"));
  Tensor2 ir = Scalar::i() * su2.r();
  QuasitriangularBialgebra scaled = QuasitriangularBialgebra::make(su2.alg(), ir);
  CHECK_FALSE(is_real_type(scaled));
  CHECK_THROWS_AS(real_transmutation_check(scaled), PreconditionError);
  CHECK_THROWS_AS(half_real_triple_check(scaled), PreconditionError);

  // The triple over the canonical dual exists for any structure and picks up
  // a non-real bracket constant.
  DoubleBosonisation t = triple_general(scaled);
  bool nonreal = false;
  for (int i = 0; i < t.result.dim() && !nonreal; ++i)
    for (int j = 0; j < t.result.dim() && !nonreal; ++j)
      for (int k = 0; k < t.result.dim() && !nonreal; ++k)
        if (!t.result.alg().c(i, j, k).is_real()) nonreal = true;
  CHECK(nonreal);
}

TEST_CASE("predicates are invariant under real changes of basis") {
  auto su2 = catalog_quasitriangular(*catalog_find("su2"));
  Space s2 = Space::make("su2b", {"v1", "v2", "v3"});
  // A fixed invertible integer matrix.
  std::vector<std::vector<Scalar>> basis = {
      {Scalar(1), Scalar(2), Scalar(0)},
      {Scalar(0), Scalar(1), Scalar(1)},
      {Scalar(1), Scalar(0), Scalar(3)},
  };
  LieAlgebra alg = change_of_basis(su2.alg(), s2, basis);
  Tensor2 r = transport_tensor(su2.r(), s2, basis);
  QuasitriangularBialgebra moved = QuasitriangularBialgebra::make(alg, r);
  CHECK(is_half_real(moved).ok());
  CHECK(is_real_type(moved));
}

TEST_CASE("half-real triple assertions") {
  // The bracket-reality and real-type assertions hold exactly on the compact
  // form; the imaginary-cobracket assertion cannot, because the b-block
  // cobracket of the triple contains the braided cobracket, which the
  // real-transmutation check above proves to be real and nonzero.  The check
  // reports exactly that and nothing else.
  auto su2 = catalog_quasitriangular(*catalog_find("su2"));
  VerificationReport rep = half_real_triple_check(su2);
  CHECK_FALSE(rep.ok());
  for (const auto& v : rep.violations()) CHECK(v.check == "triple-cobracket-imaginary");

  // On the abelian fixture all three assertions hold trivially.
  auto ab = catalog_quasitriangular(*catalog_find("abelian2"));
  CHECK(half_real_triple_check(ab).ok());
}
