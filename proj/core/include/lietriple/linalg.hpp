#pragma once

#include <vector>

#include "lietriple/tensor.hpp"

namespace lietriple {

/// Exact matrix of a linear map between labelled spaces, stored row-major
/// as codomain.dim x domain.dim.  Column j is the image of basis vector j.
class LinearMap {
public:
  static LinearMap zero(const Space& domain, const Space& codomain);
  static LinearMap identity(const Space& s);
  static LinearMap from_columns(const Space& domain, const Space& codomain,
                                const std::vector<Vec>& columns);

  const Space& domain() const { return dom_; }
  const Space& codomain() const { return cod_; }
  const Scalar& at(int row, int col) const { return m_[idx(row, col)]; }
  void set(int row, int col, Scalar v) { m_[idx(row, col)] = std::move(v); }

  Vec apply(const Vec& v) const;
  Vec column(int j) const;
  LinearMap compose(const LinearMap& inner) const; // this o inner
  LinearMap scaled(const Scalar& s) const;

  /// Exact rank by Gaussian elimination over Q(i).
  int rank() const;
  bool is_invertible() const { return dom_.dim() == cod_.dim() && rank() == dom_.dim(); }
  LinearMap inverse() const; // throws PreconditionError if singular

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.m_ == b.m_;
  }

private:
  LinearMap(const Space& d, const Space& c)
      : dom_(d), cod_(c), m_(static_cast<std::size_t>(c.dim()) * d.dim()) {}
  std::size_t idx(int row, int col) const {
    return static_cast<std::size_t>(row) * dom_.dim() + col;
  }
  Space dom_, cod_;
  std::vector<Scalar> m_;
};

/// Apply maps legwise: (a (x) b)(t).
Tensor2 map_tensor2(const LinearMap& a, const LinearMap& b, const Tensor2& t);

/// View a 2-tensor on g (x) g as a map g* -> g by contracting the second
/// leg: phi -> (id (x) phi)(t).
LinearMap tensor_as_map(const Tensor2& t);

/// Row-major dense matrix helpers over Q(i); rows need not be square.
int exact_rank(std::vector<std::vector<Scalar>> rows);

/// Dimension of the solution space of (rows) x = 0 in `unknowns` unknowns.
int nullspace_dimension(const std::vector<std::vector<Scalar>>& rows, int unknowns);

} // namespace lietriple
