#pragma once

#include <random>

#include "lietriple/catalog.hpp"
#include "lietriple/rmatrix.hpp"

namespace lietriple::testing {

/// Deterministic small-scalar generator for property tests.
class ScalarGen {
public:
  explicit ScalarGen(unsigned seed = 20240811) : rng_(seed) {}

  Scalar next() {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    Scalar re(num(rng_), den(rng_));
    Scalar im = Scalar::imaginary(num(rng_), den(rng_));
    return re + im;
  }

  Scalar next_nonzero() {
    for (;;) {
      Scalar s = next();
      if (!s.is_zero()) return s;
    }
  }

  Vec vec(const Space& s) {
    Vec v = Vec::zero(s);
    for (int i = 0; i < s.dim(); ++i) v.set(i, next());
    return v;
  }

  Tensor2 tensor2(const Space& l, const Space& r) {
    Tensor2 t = Tensor2::zero(l, r);
    for (int i = 0; i < l.dim(); ++i)
      for (int j = 0; j < r.dim(); ++j) t.set(i, j, next());
    return t;
  }

private:
  std::mt19937 rng_;
};

/// The textbook-normalised quasitriangular sl2, used wherever the worked
/// examples quote its values.
inline QuasitriangularBialgebra sl2_textbook() {
  return QuasitriangularBialgebra::make(sl2_algebra(), sl2_r_textbook());
}

} // namespace lietriple::testing
