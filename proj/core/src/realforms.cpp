#include "lietriple/realforms.hpp"

#include "lietriple/errors.hpp"

namespace lietriple {

VerificationReport is_half_real(const QuasitriangularBialgebra& q) {
  VerificationReport rep("half-real form '" + q.space().name() + "'");
  const int n = q.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!q.alg().c(i, j, k).is_real()) rep.add("bracket-constant-real", {i, j, k});
        if (!q.cob().d(i, j, k).is_imaginary()) rep.add("cobracket-constant-imaginary", {i, j, k});
      }
  return rep;
}

bool is_real_type(const QuasitriangularBialgebra& q) {
  Tensor2 sym = q.q();
  for (int i = 0; i < q.dim(); ++i)
    for (int j = 0; j < q.dim(); ++j)
      if (!sym.at(i, j).is_real()) return false;
  return true;
}

VerificationReport real_transmutation_check(const QuasitriangularBialgebra& q) {
  if (!is_real_type(q))
    throw PreconditionError("real_transmutation_check requires a real-type structure");
  VerificationReport rep("real transmutation of '" + q.space().name() + "'");
  BraidedLieBialgebra b = transmute(q);
  const int n = b.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!b.alg().c(i, j, k).is_real()) rep.add("braided-bracket-real", {i, j, k});
        if (!b.und_cob().d(i, j, k).is_real()) rep.add("braided-cobracket-real", {i, j, k});
      }
  // Self-duality: the symmetric part of r intertwines the dual object with
  // the transmutation itself.
  if (classify(q) == Classification::Factorisable) {
    BraidedLieBialgebra dual = dual_braided(b);
    LinearMap qmap = tensor_as_map(q.q()); // carrier* -> carrier
    rep.merge(check_homomorphism(qmap, dual.alg(), b.alg()));
    for (int a = 0; a < n; ++a) {
      Tensor2 lhs = map_tensor2(qmap, qmap, dual.und_cob().of_basis(a));
      Tensor2 rhs = b.und_cob().cobracket(qmap.column(a));
      if (!(lhs == rhs)) rep.add("self-duality-cobracket", {a});
    }
  }
  return rep;
}

VerificationReport half_real_triple_check(const QuasitriangularBialgebra& q) {
  if (!is_real_type(q))
    throw PreconditionError("half_real_triple_check requires a real-type structure");
  VerificationReport rep("half-real triple of '" + q.space().name() + "'");
  DoubleBosonisation t = triple(q);
  const int N = t.result.dim();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        if (!t.result.alg().c(i, j, k).is_real()) rep.add("triple-bracket-real", {i, j, k});
        if (!t.result.cob().d(i, j, k).is_imaginary())
          rep.add("triple-cobracket-imaginary", {i, j, k});
      }
  Tensor2 sym = symmetric_part(t.result.r());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (!sym.at(i, j).is_real()) rep.add("triple-real-type", {i, j});
  return rep;
}

} // namespace lietriple
