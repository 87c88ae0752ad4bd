#include "lietriple/linalg.hpp"

#include "lietriple/errors.hpp"

namespace lietriple {

LinearMap LinearMap::zero(const Space& domain, const Space& codomain) {
  return LinearMap(domain, codomain);
}

LinearMap LinearMap::identity(const Space& s) {
  LinearMap m(s, s);
  for (int i = 0; i < s.dim(); ++i) m.set(i, i, Scalar(1));
  return m;
}

LinearMap LinearMap::from_columns(const Space& domain, const Space& codomain,
                                  const std::vector<Vec>& columns) {
  if (static_cast<int>(columns.size()) != domain.dim())
    throw SpaceMismatchError("from_columns: wrong number of columns");
  LinearMap m(domain, codomain);
  for (int j = 0; j < domain.dim(); ++j) {
    require_same_space(codomain, columns[j].space(), "from_columns");
    for (int i = 0; i < codomain.dim(); ++i) m.set(i, j, columns[j].coeff(i));
  }
  return m;
}

Vec LinearMap::apply(const Vec& v) const {
  require_same_space(dom_, v.space(), "LinearMap::apply");
  Vec out = Vec::zero(cod_);
  for (int j = 0; j < dom_.dim(); ++j) {
    const Scalar& c = v.coeff(j);
    if (c.is_zero()) continue;
    for (int i = 0; i < cod_.dim(); ++i) {
      const Scalar& m = at(i, j);
      if (!m.is_zero()) out.set(i, out.coeff(i) + m * c);
    }
  }
  return out;
}

Vec LinearMap::column(int j) const {
  Vec out = Vec::zero(cod_);
  for (int i = 0; i < cod_.dim(); ++i) out.set(i, at(i, j));
  return out;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  require_same_space(dom_, inner.cod_, "LinearMap::compose");
  LinearMap out(inner.dom_, cod_);
  for (int i = 0; i < cod_.dim(); ++i)
    for (int k = 0; k < dom_.dim(); ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < inner.dom_.dim(); ++j) {
        const Scalar& b = inner.at(k, j);
        if (!b.is_zero()) out.set(i, j, out.at(i, j) + a * b);
      }
    }
  return out;
}

LinearMap LinearMap::scaled(const Scalar& s) const {
  LinearMap out = *this;
  for (auto& v : out.m_) v *= s;
  return out;
}

namespace {

// In-place row echelon; returns rank.  Exact over Q(i).
int echelon(std::vector<std::vector<Scalar>>& rows, int cols) {
  int rank = 0;
  const int nrows = static_cast<int>(rows.size());
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Scalar inv = rows[rank][col].inv();
    for (int c = col; c < cols; ++c) rows[rank][c] *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col];
      for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

} // namespace

int LinearMap::rank() const {
  std::vector<std::vector<Scalar>> rows(cod_.dim(), std::vector<Scalar>(dom_.dim()));
  for (int i = 0; i < cod_.dim(); ++i)
    for (int j = 0; j < dom_.dim(); ++j) rows[i][j] = at(i, j);
  return exact_rank(std::move(rows));
}

LinearMap LinearMap::inverse() const {
  const int n = dom_.dim();
  if (n != cod_.dim()) throw PreconditionError("inverse of a non-square map");
  // Augmented [M | I], reduce, read off the right block.
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = at(i, j);
    rows[i][n + i] = Scalar(1);
  }
  int r = echelon(rows, 2 * n);
  for (int i = 0; i < n; ++i)
    if (rows[i][i] != Scalar(1)) throw PreconditionError("inverse of a singular map");
  (void)r;
  LinearMap out(cod_, dom_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, rows[i][n + j]);
  return out;
}

Tensor2 map_tensor2(const LinearMap& a, const LinearMap& b, const Tensor2& t) {
  require_same_space(a.domain(), t.left(), "map_tensor2 (left leg)");
  require_same_space(b.domain(), t.right(), "map_tensor2 (right leg)");
  Tensor2 out = Tensor2::zero(a.codomain(), b.codomain());
  for (int i = 0; i < t.left().dim(); ++i)
    for (int j = 0; j < t.right().dim(); ++j) {
      const Scalar& c = t.at(i, j);
      if (c.is_zero()) continue;
      Vec ai = a.column(i);
      Vec bj = b.column(j);
      for (int p = 0; p < ai.dim(); ++p) {
        if (ai.coeff(p).is_zero()) continue;
        for (int q = 0; q < bj.dim(); ++q) {
          if (bj.coeff(q).is_zero()) continue;
          out.add(p, q, c * ai.coeff(p) * bj.coeff(q));
        }
      }
    }
  return out;
}

LinearMap tensor_as_map(const Tensor2& t) {
  require_same_space(t.left(), t.right(), "tensor_as_map");
  LinearMap out = LinearMap::zero(t.left().dual(), t.left());
  for (int i = 0; i < t.left().dim(); ++i)
    for (int j = 0; j < t.right().dim(); ++j) out.set(i, j, t.at(i, j));
  return out;
}

int exact_rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  return echelon(rows, static_cast<int>(rows[0].size()));
}

int nullspace_dimension(const std::vector<std::vector<Scalar>>& rows, int unknowns) {
  std::vector<std::vector<Scalar>> copy = rows;
  for (auto& r : copy)
    if (static_cast<int>(r.size()) != unknowns)
      throw PreconditionError("nullspace_dimension: ragged system");
  if (copy.empty()) return unknowns;
  return unknowns - echelon(copy, unknowns);
}

} // namespace lietriple
