#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lietriple/scalar.hpp"

namespace lietriple {

class LieAlgebra;

/// A finite-dimensional vector space with a fixed labelled basis.
/// Cheap to copy; equality compares the label lists so independently built
/// copies of the same space interoperate.
class Space {
public:
  static Space make(std::string name, std::vector<std::string> labels);

  int dim() const { return static_cast<int>(d_->labels.size()); }
  const std::string& name() const { return d_->name; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::string& label(int i) const { return d_->labels.at(i); }

  /// Same labels with a star suffix; pairing convention <f^a, e_b> = delta.
  Space dual() const;

  friend bool operator==(const Space& a, const Space& b) {
    return a.d_ == b.d_ || a.d_->labels == b.d_->labels;
  }
  friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }

private:
  struct Data {
    std::string name;
    std::vector<std::string> labels;
  };
  explicit Space(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

void require_same_space(const Space& a, const Space& b, const char* where);

/// Element of a Space, dense exact coefficients over the labelled basis.
class Vec {
public:
  static Vec zero(const Space& s) { return Vec(s); }
  static Vec basis(const Space& s, int i);

  const Space& space() const { return sp_; }
  int dim() const { return sp_.dim(); }
  const Scalar& coeff(int i) const { return c_.at(i); }
  void set(int i, Scalar v) { c_.at(i) = std::move(v); }
  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }
  Vec operator-() const;
  friend bool operator==(const Vec& a, const Vec& b) {
    return a.sp_ == b.sp_ && a.c_ == b.c_;
  }

  std::string str() const;

private:
  explicit Vec(const Space& s) : sp_(s), c_(s.dim()) {}
  Space sp_;
  std::vector<Scalar> c_;
};

/// Element of left (x) right, dense.
class Tensor2 {
public:
  static Tensor2 zero(const Space& left, const Space& right) { return Tensor2(left, right); }

  const Space& left() const { return l_; }
  const Space& right() const { return r_; }
  const Scalar& at(int i, int j) const { return c_[idx(i, j)]; }
  void set(int i, int j, Scalar v) { c_[idx(i, j)] = std::move(v); }
  void add(int i, int j, const Scalar& v) { c_[idx(i, j)] += v; }
  bool is_zero() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const Scalar& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Scalar& s, Tensor2 t) { return t *= s; }
  Tensor2 operator-() const;
  friend bool operator==(const Tensor2& a, const Tensor2& b) {
    return a.l_ == b.l_ && a.r_ == b.r_ && a.c_ == b.c_;
  }

  std::string str() const;

private:
  Tensor2(const Space& l, const Space& r)
      : l_(l), r_(r), c_(static_cast<std::size_t>(l.dim()) * r.dim()) {}
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * r_.dim() + j; }
  Space l_, r_;
  std::vector<Scalar> c_;
};

class Tensor3 {
public:
  static Tensor3 zero(const Space& a, const Space& b, const Space& c) { return Tensor3(a, b, c); }

  const Space& first() const { return a_; }
  const Space& second() const { return b_; }
  const Space& third() const { return c_; }
  const Scalar& at(int i, int j, int k) const { return v_[idx(i, j, k)]; }
  void set(int i, int j, int k, Scalar s) { v_[idx(i, j, k)] = std::move(s); }
  void add(int i, int j, int k, const Scalar& s) { v_[idx(i, j, k)] += s; }
  bool is_zero() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.a_ == b.a_ && a.b_ == b.b_ && a.c_ == b.c_ && a.v_ == b.v_;
  }

  /// Cyclic rotation u(x)v(x)w -> w(x)u(x)v.
  Tensor3 rotate() const;

private:
  Tensor3(const Space& a, const Space& b, const Space& c)
      : a_(a), b_(b), c_(c),
        v_(static_cast<std::size_t>(a.dim()) * b.dim() * c.dim()) {}
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * b_.dim() + j) * c_.dim() + k;
  }
  Space a_, b_, c_;
  std::vector<Scalar> v_;
};

Tensor2 flip(const Tensor2& t);
Tensor2 tensor_of(const Vec& a, const Vec& b);

/// Placement bookkeeping for a 2-tensor inside a triple tensor product.
/// The omitted slot stays zero; these exist as inputs to schouten_term.
Tensor3 embed12(const Tensor2& t, const Space& third);
Tensor3 embed13(const Tensor2& t, const Space& third);
Tensor3 embed23(const Tensor2& t, const Space& third);

enum class SchoutenSlots { S12_13, S12_23, S13_23 };

/// One pairwise-contracted term of the Schouten bracket of r and s: the
/// bracket is taken in the slot the two placements share, e.g. S12_13 gives
/// sum [r(1), s(1)] (x) r(2) (x) s(2).
Tensor3 schouten_term(const Tensor2& r, const Tensor2& s, SchoutenSlots slots,
                      const LieAlgebra& alg);

/// Leibniz extension of the adjoint action to 2- and 3-tensors.
Tensor2 ad_extend(const LieAlgebra& alg, const Vec& x, const Tensor2& t);
Tensor3 ad_extend3(const LieAlgebra& alg, const Vec& x, const Tensor3& t);

} // namespace lietriple
