#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "lietriple/errors.hpp"

namespace lietriple {

/// Exact Gaussian rational a/b + (c/d)i.
///
/// Both fractions are kept canonical (positive denominator, coprime), so
/// equality is componentwise integer equality and every verification in the
/// engine is an exact test, never a tolerance test.  Immutable value type.
class Scalar {
public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}
  Scalar(long num, long den);

  static Scalar from_parts(mpq_class re, mpq_class im);
  static Scalar i() { return imaginary(1, 1); }
  static Scalar imaginary(long num, long den = 1);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  mpz_class re_num() const { return re_.get_num(); }
  mpz_class re_den() const { return re_.get_den(); }
  mpz_class im_num() const { return im_.get_num(); }
  mpz_class im_den() const { return im_.get_den(); }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  /// Multiplicative inverse; throws DivisionByZeroError on zero.
  Scalar inv() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: "2", "-1/4", "1i", "-2/3i", "1/2+1/3i", "1/2-1i".
  std::string str() const;

  /// Accepts the canonical forms plus omitted denominators ("2" = "2/1"),
  /// explicit zero parts ("0+1/1i") and a bare "i"/"-i".
  static Scalar parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  mpq_class re_;
  mpq_class im_;
};

} // namespace lietriple
