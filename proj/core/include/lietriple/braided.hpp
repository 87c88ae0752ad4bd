#pragma once

#include "lietriple/rmatrix.hpp"

namespace lietriple {

/// Structure constants of a left action: xi_i |> x_j = sum_k a[i][j][k] x_k.
class ModuleAction {
public:
  /// Validated: [xi,eta] |> x = xi |> (eta |> x) - eta |> (xi |> x).
  static ModuleAction make(LieAlgebra acting, Space carrier, std::vector<Scalar> a);
  static ModuleAction unchecked(LieAlgebra acting, Space carrier, std::vector<Scalar> a);
  /// The adjoint action of alg on its own space.
  static ModuleAction adjoint(const LieAlgebra& alg);

  const LieAlgebra& acting() const { return g_; }
  const Space& carrier() const { return b_; }
  const Scalar& a(int i, int j, int k) const { return a_[idx(i, j, k)]; }

  Vec act(const Vec& xi, const Vec& x) const;
  Vec act_basis(int i, int j) const;
  /// Leibniz extension to carrier (x) carrier.
  Tensor2 act2(const Vec& xi, const Tensor2& t) const;

private:
  ModuleAction(LieAlgebra g, Space b, std::vector<Scalar> a);
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * b_.dim() + j) * b_.dim() + k;
  }
  LieAlgebra g_;
  Space b_;
  std::vector<Scalar> a_;
};

VerificationReport verify_module_action(const ModuleAction& act);

/// psi(a (x) b) = 2r_+ |> (a (x) b - b (x) a), computed from the ambient
/// symmetric part and the module action.
Tensor2 infinitesimal_braiding(const QuasitriangularBialgebra& ambient, const ModuleAction& act,
                               const Vec& a, const Vec& b);

/// A covariant Lie algebra and Lie coalgebra on a module whose cobracket
/// coboundary equals the infinitesimal braiding.
class BraidedLieBialgebra {
public:
  static BraidedLieBialgebra make(QuasitriangularBialgebra ambient, ModuleAction action,
                                  LieAlgebra alg, LieCobracket und_cob);
  static BraidedLieBialgebra unchecked(QuasitriangularBialgebra ambient, ModuleAction action,
                                       LieAlgebra alg, LieCobracket und_cob);

  const QuasitriangularBialgebra& ambient() const { return ambient_; }
  const ModuleAction& action() const { return action_; }
  const LieAlgebra& alg() const { return alg_; }
  const LieCobracket& und_cob() const { return cob_; }
  const Space& carrier() const { return alg_.space(); }
  int dim() const { return alg_.dim(); }

private:
  BraidedLieBialgebra(QuasitriangularBialgebra am, ModuleAction ac, LieAlgebra al,
                      LieCobracket co)
      : ambient_(std::move(am)), action_(std::move(ac)), alg_(std::move(al)),
        cob_(std::move(co)) {}
  QuasitriangularBialgebra ambient_;
  ModuleAction action_;
  LieAlgebra alg_;
  LieCobracket cob_;
};

/// Covariance of bracket and cobracket plus the coboundary identity
/// d(und_cob) = psi, all on basis elements.
VerificationReport verify_braided(const BraidedLieBialgebra& b);

/// ad_a(delta b) - ad_b(delta a) - delta([a,b]) with everything taken in the
/// carrier algebra; equals psi(a (x) b) exactly on a braided-Lie bialgebra.
Tensor2 cobracket_coboundary(const BraidedLieBialgebra& b, const Vec& x, const Vec& y);

/// The adjoint module of the ambient algebra with its own bracket and the
/// braided cobracket delta(x) = 2r_+^(1) (x) [x, r_+^(2)].
BraidedLieBialgebra transmute(const QuasitriangularBialgebra& q);

/// Dual object on the starred carrier: bracket and cobracket constants are
/// swapped through the dual-basis pairing, the action is minus-transpose.
BraidedLieBialgebra dual_braided(const BraidedLieBialgebra& b);

struct PairedBraidedPair {
  BraidedLieBialgebra b;
  BraidedLieBialgebra c;
  /// Bilinear form as a map b-carrier -> (c-carrier)*.
  LinearMap pairing;

  Scalar pair(int i, int k) const { return pairing.at(k, i); }
};

/// Pairing intertwines each bracket with the other cobracket and is
/// invariant under the ambient action; also requires nondegeneracy.
VerificationReport verify_braided_pairing(const PairedBraidedPair& p);

/// Dual pair (b, dual_braided(b)) under the canonical evaluation pairing.
PairedBraidedPair evaluation_pair(const BraidedLieBialgebra& b);

/// Factorisable self-pairing of the transmutation through the Killing form.
/// Requires the normalisation identity K^{-1} = (2r_+ as a map g* -> g);
/// reports a precondition failure otherwise.
PairedBraidedPair self_pairing_factorisable(const QuasitriangularBialgebra& q,
                                            const BraidedLieBialgebra& transmuted);

/// For a triangular ambient structure: dimension of the space of covariant
/// cobrackets on the adjoint module with zero coboundary.  Zero means the
/// braided cobracket is forced to vanish.
int forced_zero_cobracket(const QuasitriangularBialgebra& q);

} // namespace lietriple
