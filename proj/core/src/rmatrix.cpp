#include "lietriple/rmatrix.hpp"

#include "lietriple/errors.hpp"

namespace lietriple {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Triangular: return "triangular";
    case Classification::Factorisable: return "factorisable";
    case Classification::Neither: return "neither";
  }
  return "?";
}

Tensor3 schouten_bracket(const Tensor2& r, const Tensor2& s, const LieAlgebra& alg) {
  Tensor3 out = schouten_term(r, s, SchoutenSlots::S12_13, alg);
  out += schouten_term(r, s, SchoutenSlots::S12_23, alg);
  out += schouten_term(r, s, SchoutenSlots::S13_23, alg);
  return out;
}

Tensor3 cybe(const Tensor2& r, const LieAlgebra& alg) { return schouten_bracket(r, r, alg); }

Tensor2 symmetric_part(const Tensor2& r) { return r + flip(r); }

LieCobracket coboundary(const LieAlgebra& alg, const Tensor2& r) {
  const int n = alg.dim();
  std::vector<Scalar> d(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) {
    Tensor2 t = ad_extend(alg, Vec::basis(alg.space(), i), r);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        d[(static_cast<std::size_t>(i) * n + j) * n + k] = t.at(j, k);
  }
  return LieCobracket::unchecked(alg.space(), std::move(d));
}

VerificationReport verify_quasitriangular(const LieAlgebra& alg, const Tensor2& r) {
  VerificationReport report("quasitriangular '" + alg.space().name() + "'");
  require_same_space(alg.space(), r.left(), "verify_quasitriangular (r left)");
  require_same_space(alg.space(), r.right(), "verify_quasitriangular (r right)");
  Tensor3 yb = cybe(r, alg);
  const int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!yb.at(i, j, k).is_zero()) report.add("cybe", {i, j, k});
  Tensor2 q = symmetric_part(r);
  for (int x = 0; x < n; ++x)
    if (!ad_extend(alg, Vec::basis(alg.space(), x), q).is_zero())
      report.add("symmetric-part-ad-invariance", {x});
  return report;
}

QuasitriangularBialgebra QuasitriangularBialgebra::make(LieAlgebra alg, Tensor2 r) {
  require_valid(verify_quasitriangular(alg, r));
  LieCobracket cob = coboundary(alg, r);
  LieBialgebra b = LieBialgebra::make(std::move(alg), std::move(cob));
  return QuasitriangularBialgebra(std::move(b), std::move(r));
}

Classification classify(const QuasitriangularBialgebra& q) {
  Tensor2 sym = q.q();
  if (sym.is_zero()) return Classification::Triangular;
  if (tensor_as_map(sym).rank() == q.dim()) return Classification::Factorisable;
  return Classification::Neither;
}

QuasitriangularBialgebra opposite_structure(const QuasitriangularBialgebra& q) {
  return QuasitriangularBialgebra::make(q.alg(), -flip(q.r()));
}

VerificationReport validate_twist(const QuasitriangularBialgebra& q, const TwistCocycle& chi) {
  VerificationReport report("twist datum on '" + q.space().name() + "'");
  require_same_space(q.space(), chi.chi.left(), "validate_twist");
  require_same_space(q.space(), chi.chi.right(), "validate_twist");
  const int n = q.dim();
  Tensor2 sym = symmetric_part(chi.chi);
  for (int x = 0; x < n; ++x) {
    Tensor2 t = ad_extend(q.alg(), Vec::basis(q.space(), x), sym);
    if (t.is_zero()) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!t.at(i, j).is_zero()) report.add("twist-symmetry ad_xi(chi+chi21)", {x, i, j});
  }
  Tensor3 mixed = schouten_bracket(q.r(), chi.chi, q.alg());
  mixed += schouten_bracket(chi.chi, q.r(), q.alg());
  mixed += schouten_bracket(chi.chi, chi.chi, q.alg());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!mixed.at(i, j, k).is_zero())
          report.add("twist-cocycle [[r,chi]]+[[chi,r]]+[[chi,chi]]", {i, j, k});
  return report;
}

QuasitriangularBialgebra twist(const QuasitriangularBialgebra& q, const TwistCocycle& chi) {
  VerificationReport report = validate_twist(q, chi);
  if (!report.ok()) throw PreconditionError(report.summary());
  return QuasitriangularBialgebra::make(q.alg(), q.r() + chi.chi);
}

bool verify_alternative_cocycle_form(const QuasitriangularBialgebra& q, const TwistCocycle& chi) {
  const Space& s = q.space();
  const int n = q.dim();
  // (id (x) delta)chi
  Tensor3 t = Tensor3::zero(s, s, s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& c = chi.chi.at(i, j);
      if (c.is_zero()) continue;
      Tensor2 dj = q.cob().of_basis(j);
      for (int p = 0; p < n; ++p)
        for (int qq = 0; qq < n; ++qq) {
          const Scalar& d = dj.at(p, qq);
          if (!d.is_zero()) t.add(i, p, qq, c * d);
        }
    }
  Tensor3 rot = t.rotate();
  Tensor3 total = t + rot + rot.rotate();
  total += schouten_bracket(chi.chi, chi.chi, q.alg());
  for (int x = 0; x < n; ++x)
    if (!ad_extend3(q.alg(), Vec::basis(s, x), total).is_zero()) return false;
  return true;
}

Vec r_contract_second(const Tensor2& r, int a) {
  Vec out = Vec::zero(r.left());
  for (int i = 0; i < r.left().dim(); ++i) out.set(i, r.at(i, a));
  return out;
}

Vec r_contract_first(const Tensor2& r, int a) {
  Vec out = Vec::zero(r.right());
  for (int j = 0; j < r.right().dim(); ++j) out.set(j, r.at(a, j));
  return out;
}

} // namespace lietriple
