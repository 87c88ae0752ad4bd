#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lietriple/linalg.hpp"
#include "lietriple/tensor.hpp"

namespace lietriple {

/// One violated axiom instance: which check, at which basis indices.
struct Violation {
  std::string check;
  std::vector<int> indices;
  std::string detail;
};

/// Violations are data, not errors; an empty report means the object is valid.
class VerificationReport {
public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  void add(std::string check, std::vector<int> indices, std::string detail = {});
  void merge(const VerificationReport& other);
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::string& subject() const { return subject_; }
  std::string summary() const;

private:
  std::string subject_;
  std::vector<Violation> violations_;
};

/// Throws ConstructionError carrying the report summary unless it is empty.
void require_valid(const VerificationReport& report);

/// Lie algebra as structure-constant data over a labelled space:
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
public:
  /// Validated construction: antisymmetry and Jacobi are checked exactly.
  static LieAlgebra make(const Space& s, std::vector<Scalar> c);
  /// Raw construction for intentionally invalid inputs used in negative tests.
  static LieAlgebra unchecked(const Space& s, std::vector<Scalar> c);
  static LieAlgebra abelian(const Space& s);

  const Space& space() const { return sp_; }
  int dim() const { return sp_.dim(); }
  const Scalar& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }

  /// Nonzero (k, coefficient) entries of [e_i, e_j].
  const std::vector<std::pair<int, Scalar>>& bracket_row(int i, int j) const {
    return rows_[static_cast<std::size_t>(i) * sp_.dim() + j];
  }

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis(int i, int j) const;
  LinearMap ad(const Vec& x) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.sp_ == b.sp_ && a.c_ == b.c_;
  }

private:
  LieAlgebra(const Space& s, std::vector<Scalar> c);
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * sp_.dim() + j) * sp_.dim() + k;
  }
  Space sp_;
  std::vector<Scalar> c_;
  std::vector<std::vector<std::pair<int, Scalar>>> rows_;
};

/// Lie cobracket data: delta(e_i) = sum_{j,k} d[i][j][k] e_j (x) e_k.
class LieCobracket {
public:
  static LieCobracket make(const Space& s, std::vector<Scalar> d);
  static LieCobracket unchecked(const Space& s, std::vector<Scalar> d);
  static LieCobracket zero(const Space& s);

  const Space& space() const { return sp_; }
  int dim() const { return sp_.dim(); }
  const Scalar& d(int i, int j, int k) const { return d_[idx(i, j, k)]; }

  Tensor2 of_basis(int i) const;
  Tensor2 cobracket(const Vec& x) const;

  friend bool operator==(const LieCobracket& a, const LieCobracket& b) {
    return a.sp_ == b.sp_ && a.d_ == b.d_;
  }

private:
  LieCobracket(const Space& s, std::vector<Scalar> d);
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * sp_.dim() + j) * sp_.dim() + k;
  }
  Space sp_;
  std::vector<Scalar> d_;
};

class LieBialgebra {
public:
  /// Checks the component structures and the compatibility axiom exactly.
  static LieBialgebra make(LieAlgebra alg, LieCobracket cob);
  static LieBialgebra unchecked(LieAlgebra alg, LieCobracket cob);

  const LieAlgebra& alg() const { return alg_; }
  const LieCobracket& cob() const { return cob_; }
  const Space& space() const { return alg_.space(); }
  int dim() const { return alg_.dim(); }

  friend bool operator==(const LieBialgebra& a, const LieBialgebra& b) {
    return a.alg_ == b.alg_ && a.cob_ == b.cob_;
  }

private:
  LieBialgebra(LieAlgebra alg, LieCobracket cob)
      : alg_(std::move(alg)), cob_(std::move(cob)) {}
  LieAlgebra alg_;
  LieCobracket cob_;
};

/// Lists every violated antisymmetry / Jacobi instance.
VerificationReport verify_lie_algebra(const LieAlgebra& alg);

/// Lists every violated anticocommutativity / co-Jacobi instance.
VerificationReport verify_lie_coalgebra(const LieCobracket& cob);

/// Checks the compatibility axiom
/// delta([x,y]) = ad_x(delta y) - ad_y(delta x) on all basis pairs.
VerificationReport verify_bialgebra(const LieBialgebra& b);

/// Bracket of the output is the cobracket of the input with index roles
/// swapped, and dually; lives on the starred dual space.
LieBialgebra dualize(const LieBialgebra& b);

/// All structure constants negated.
LieAlgebra opposite(const LieAlgebra& alg);

/// K[i][j] = trace(ad e_i o ad e_j), as a map g -> g*.
LinearMap killing_form(const LieAlgebra& alg);
Scalar killing_pair(const LinearMap& k, int i, int j);

/// Verifies m([x,y]) = [m(x), m(y)] on all basis pairs.
VerificationReport check_homomorphism(const LinearMap& m, const LieAlgebra& src,
                                      const LieAlgebra& dst);

/// Verifies (m (x) m)(delta_src x) = delta_dst(m x) on all basis vectors.
VerificationReport check_coalgebra_homomorphism(const LinearMap& m, const LieCobracket& src,
                                                const LieCobracket& dst);

/// Transport of structure through a change of basis.  Row i of `basis` gives
/// the new basis vector u_i in old coordinates.
LieAlgebra change_of_basis(const LieAlgebra& alg, const Space& new_space,
                           const std::vector<std::vector<Scalar>>& basis);
Tensor2 transport_tensor(const Tensor2& t, const Space& new_space,
                         const std::vector<std::vector<Scalar>>& basis);

} // namespace lietriple
