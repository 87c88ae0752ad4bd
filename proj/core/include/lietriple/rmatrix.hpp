#pragma once

#include "lietriple/liealg.hpp"

namespace lietriple {

enum class Classification { Triangular, Factorisable, Neither };

const char* to_string(Classification c);

/// Full Schouten expression [[r,s]] placed in g (x) g (x) g.
Tensor3 schouten_bracket(const Tensor2& r, const Tensor2& s, const LieAlgebra& alg);

/// [[r,r]]; the zero tensor exactly when the Yang-Baxter condition holds.
Tensor3 cybe(const Tensor2& r, const LieAlgebra& alg);

/// r + flip(r).
Tensor2 symmetric_part(const Tensor2& r);

/// Coboundary cobracket d(e_i) = ad_{e_i}(r); not validated here.
LieCobracket coboundary(const LieAlgebra& alg, const Tensor2& r);

/// A bialgebra whose cobracket is the coboundary of an r-matrix satisfying
/// the Yang-Baxter condition with ad-invariant symmetric part.  The cobracket
/// is always re-derived from r, never taken from the caller.
class QuasitriangularBialgebra {
public:
  /// Verifies everything exactly; throws ConstructionError on failure.
  static QuasitriangularBialgebra make(LieAlgebra alg, Tensor2 r);

  const LieBialgebra& bialg() const { return bialg_; }
  const LieAlgebra& alg() const { return bialg_.alg(); }
  const LieCobracket& cob() const { return bialg_.cob(); }
  const Tensor2& r() const { return r_; }
  const Space& space() const { return bialg_.space(); }
  int dim() const { return bialg_.dim(); }

  Tensor2 q() const { return symmetric_part(r_); }

  friend bool operator==(const QuasitriangularBialgebra& a, const QuasitriangularBialgebra& b) {
    return a.bialg_ == b.bialg_ && a.r_ == b.r_;
  }

private:
  QuasitriangularBialgebra(LieBialgebra b, Tensor2 r)
      : bialg_(std::move(b)), r_(std::move(r)) {}
  LieBialgebra bialg_;
  Tensor2 r_;
};

/// Violations of the quasitriangular axioms for (alg, r); empty iff
/// QuasitriangularBialgebra::make would succeed.
VerificationReport verify_quasitriangular(const LieAlgebra& alg, const Tensor2& r);

/// Triangular iff the symmetric part vanishes; factorisable iff it has full
/// rank as a map g* -> g; "neither" covers everything in between.
Classification classify(const QuasitriangularBialgebra& q);

/// Same algebra with r replaced by -flip(r); fully re-verified.
QuasitriangularBialgebra opposite_structure(const QuasitriangularBialgebra& q);

struct TwistCocycle {
  Tensor2 chi;
};

/// Both twist conditions:
///   ad_xi(chi + flip(chi)) = 0 for every basis xi, and
///   [[r,chi]] + [[chi,r]] + [[chi,chi]] = 0.
VerificationReport validate_twist(const QuasitriangularBialgebra& q, const TwistCocycle& chi);

/// Replaces r by r + chi after validating the twist datum; the bracket is
/// untouched and the new structure is fully re-verified.
QuasitriangularBialgebra twist(const QuasitriangularBialgebra& q, const TwistCocycle& chi);

/// The equivalent first twist condition,
///   ad_xi((id (x) delta)chi + cyclic + [[chi,chi]]) = 0 for all xi,
/// stated for chi already satisfying the symmetry condition.  Must agree
/// with the direct Schouten test.
bool verify_alternative_cocycle_form(const QuasitriangularBialgebra& q, const TwistCocycle& chi);

/// Contractions of r with a functional given by dual-basis index a:
///   r_contract_second: (id (x) f^a)(r),  r_contract_first: (f^a (x) id)(r).
Vec r_contract_second(const Tensor2& r, int a);
Vec r_contract_first(const Tensor2& r, int a);

} // namespace lietriple
