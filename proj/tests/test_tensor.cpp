#include <doctest.h>

#include "lietriple/liealg.hpp"
#include "lietriple/rmatrix.hpp"
#include "test_support.hpp"

using namespace lietriple;

namespace {

// Independent expansion of the full Schouten bracket, written directly from
// the componentwise definition.  This is the oracle the implementation is
// checked against; it shares no code with schouten_term.
Tensor3 schouten_oracle(const Tensor2& r, const Tensor2& s, const LieAlgebra& g) {
  const int n = g.dim();
  Tensor3 out = Tensor3::zero(g.space(), g.space(), g.space());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Scalar coef = r.at(i, j) * s.at(k, l);
          if (coef.is_zero()) continue;
          for (int a = 0; a < n; ++a) {
            const Scalar& c1 = g.c(i, k, a);
            if (!c1.is_zero()) out.add(a, j, l, coef * c1); // bracket in slot 1
            const Scalar& c2 = g.c(j, k, a);
            if (!c2.is_zero()) out.add(i, a, l, coef * c2); // bracket in slot 2
            const Scalar& c3 = g.c(j, l, a);
            if (!c3.is_zero()) out.add(i, k, a, coef * c3); // bracket in slot 3
          }
        }
  return out;
}

} // namespace

TEST_CASE("flip") {
  LieAlgebra g = sl2_algebra();
  const Space& s = g.space();
  Tensor2 ef = tensor_of(Vec::basis(s, 1), Vec::basis(s, 2));
  Tensor2 fe = tensor_of(Vec::basis(s, 2), Vec::basis(s, 1));
  CHECK(flip(ef) == fe);

  Tensor2 sym = ef + fe;
  CHECK(flip(sym) == sym);

  testing::ScalarGen gen;
  for (int trial = 0; trial < 20; ++trial) {
    Tensor2 t = gen.tensor2(s, s);
    CHECK(flip(flip(t)) == t);
  }
}

TEST_CASE("embeddings are slot bookkeeping") {
  LieAlgebra g = sl2_algebra();
  const Space& s = g.space();
  Tensor2 ef = tensor_of(Vec::basis(s, 1), Vec::basis(s, 2));
  Tensor3 t12 = embed12(ef, s);
  CHECK(t12.first() == s);
  CHECK(t12.is_zero()); // no unit element fills the omitted slot
  CHECK(embed13(ef, s).second() == s);
  CHECK(embed23(ef, s).first() == s);
}

TEST_CASE("schouten terms") {
  LieAlgebra g = sl2_algebra();
  const Space& s = g.space();

  // All brackets vanish on an abelian algebra.
  Space as = Space::make("ab3", {"a", "b", "c"});
  LieAlgebra ab = LieAlgebra::abelian(as);
  testing::ScalarGen gen;
  Tensor2 random_r = gen.tensor2(as, as);
  CHECK(schouten_term(random_r, random_r, SchoutenSlots::S12_13, ab).is_zero());
  CHECK(schouten_bracket(random_r, random_r, ab).is_zero());

  // [e,e] (x) f (x) f = 0.
  Tensor2 ef = tensor_of(Vec::basis(s, 1), Vec::basis(s, 2));
  CHECK(schouten_term(ef, ef, SchoutenSlots::S12_13, g).is_zero());

  // The standard sl2 structure satisfies the Yang-Baxter condition; the
  // independent oracle agrees term by term, zero and nonzero cases alike.
  Tensor2 r = sl2_r_textbook();
  Tensor3 sum = schouten_bracket(r, r, g);
  CHECK(sum == schouten_oracle(r, r, g));
  CHECK(sum.is_zero());
  Tensor3 bad = schouten_bracket(ef, ef, g);
  CHECK(bad == schouten_oracle(ef, ef, g));
  CHECK_FALSE(bad.is_zero());
}

TEST_CASE("schouten bilinearity") {
  LieAlgebra g = sl2_algebra();
  testing::ScalarGen gen;
  Tensor2 r = gen.tensor2(g.space(), g.space());
  Tensor2 s = gen.tensor2(g.space(), g.space());
  Scalar a = gen.next_nonzero(), b = gen.next_nonzero();
  for (auto slots : {SchoutenSlots::S12_13, SchoutenSlots::S12_23, SchoutenSlots::S13_23}) {
    Tensor3 lhs = schouten_term(a * r, b * s, slots, g);
    Tensor3 rhs = schouten_term(r, s, slots, g);
    Tensor3 scaled = Tensor3::zero(g.space(), g.space(), g.space());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) scaled.add(i, j, k, a * b * rhs.at(i, j, k));
    CHECK(lhs == scaled);
  }
}

TEST_CASE("adjoint extension to tensors") {
  LieAlgebra g = sl2_algebra();
  const Space& s = g.space();
  Vec h = Vec::basis(s, 0), e = Vec::basis(s, 1), f = Vec::basis(s, 2);

  CHECK(ad_extend(g, h, tensor_of(e, f)).is_zero()); // 2 e(x)f - 2 e(x)f

  Tensor2 hh = tensor_of(h, h);
  Tensor2 expect = -(Scalar(2) * tensor_of(e, h)) - Scalar(2) * tensor_of(h, e);
  CHECK(ad_extend(g, e, hh) == expect);

  Space as = Space::make("ab2", {"a", "b"});
  LieAlgebra ab = LieAlgebra::abelian(as);
  testing::ScalarGen gen;
  CHECK(ad_extend(ab, gen.vec(as), gen.tensor2(as, as)).is_zero());
}

TEST_CASE("adjoint extension is a derivation") {
  LieAlgebra g = sl2_algebra();
  const Space& s = g.space();
  for (int x = 0; x < 3; ++x)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Vec vx = Vec::basis(s, x), va = Vec::basis(s, a), vb = Vec::basis(s, b);
        Tensor2 lhs = ad_extend(g, vx, tensor_of(va, vb));
        Tensor2 rhs = tensor_of(g.bracket(vx, va), vb) + tensor_of(va, g.bracket(vx, vb));
        CHECK(lhs == rhs);
      }
}
