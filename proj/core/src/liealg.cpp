#include "lietriple/liealg.hpp"

#include <sstream>

#include "lietriple/errors.hpp"

namespace lietriple {

void VerificationReport::add(std::string check, std::vector<int> indices, std::string detail) {
  violations_.push_back({std::move(check), std::move(indices), std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& v : other.violations_) violations_.push_back(v);
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (subject_.empty() ? "verification" : subject_);
  if (ok()) {
    os << ": ok";
    return os.str();
  }
  os << ": " << violations_.size() << " violation(s)";
  std::size_t shown = 0;
  for (const auto& v : violations_) {
    if (shown++ == 8) {
      os << "; ...";
      break;
    }
    os << "; " << v.check << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i)
      os << (i ? "," : "") << v.indices[i];
    os << ")";
    if (!v.detail.empty()) os << " " << v.detail;
  }
  return os.str();
}

void require_valid(const VerificationReport& report) {
  if (!report.ok()) throw ConstructionError(report.summary());
}

LieAlgebra::LieAlgebra(const Space& s, std::vector<Scalar> c) : sp_(s), c_(std::move(c)) {
  const int n = sp_.dim();
  if (c_.size() != static_cast<std::size_t>(n) * n * n)
    throw ConstructionError("structure constant array has wrong size for '" + s.name() + "'");
  rows_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& row = rows_[static_cast<std::size_t>(i) * n + j];
      for (int k = 0; k < n; ++k)
        if (!c_[idx(i, j, k)].is_zero()) row.emplace_back(k, c_[idx(i, j, k)]);
    }
}

LieAlgebra LieAlgebra::make(const Space& s, std::vector<Scalar> c) {
  LieAlgebra alg(s, std::move(c));
  require_valid(verify_lie_algebra(alg));
  return alg;
}

LieAlgebra LieAlgebra::unchecked(const Space& s, std::vector<Scalar> c) {
  return LieAlgebra(s, std::move(c));
}

LieAlgebra LieAlgebra::abelian(const Space& s) {
  return LieAlgebra(s, std::vector<Scalar>(static_cast<std::size_t>(s.dim()) * s.dim() * s.dim()));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  require_same_space(sp_, x.space(), "bracket (x)");
  require_same_space(sp_, y.space(), "bracket (y)");
  Vec out = Vec::zero(sp_);
  for (int i = 0; i < dim(); ++i) {
    if (x.coeff(i).is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y.coeff(j).is_zero()) continue;
      Scalar coef = x.coeff(i) * y.coeff(j);
      for (const auto& [k, c] : bracket_row(i, j)) out.set(k, out.coeff(k) + coef * c);
    }
  }
  return out;
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec out = Vec::zero(sp_);
  for (const auto& [k, c] : bracket_row(i, j)) out.set(k, c);
  return out;
}

LinearMap LieAlgebra::ad(const Vec& x) const {
  LinearMap m = LinearMap::zero(sp_, sp_);
  for (int j = 0; j < dim(); ++j) {
    Vec col = bracket(x, Vec::basis(sp_, j));
    for (int i = 0; i < dim(); ++i) m.set(i, j, col.coeff(i));
  }
  return m;
}

LieCobracket::LieCobracket(const Space& s, std::vector<Scalar> d) : sp_(s), d_(std::move(d)) {
  const int n = sp_.dim();
  if (d_.size() != static_cast<std::size_t>(n) * n * n)
    throw ConstructionError("cobracket constant array has wrong size for '" + s.name() + "'");
}

LieCobracket LieCobracket::make(const Space& s, std::vector<Scalar> d) {
  LieCobracket cob(s, std::move(d));
  require_valid(verify_lie_coalgebra(cob));
  return cob;
}

LieCobracket LieCobracket::unchecked(const Space& s, std::vector<Scalar> d) {
  return LieCobracket(s, std::move(d));
}

LieCobracket LieCobracket::zero(const Space& s) {
  return LieCobracket(s, std::vector<Scalar>(static_cast<std::size_t>(s.dim()) * s.dim() * s.dim()));
}

Tensor2 LieCobracket::of_basis(int i) const {
  Tensor2 out = Tensor2::zero(sp_, sp_);
  for (int j = 0; j < dim(); ++j)
    for (int k = 0; k < dim(); ++k) {
      const Scalar& v = d(i, j, k);
      if (!v.is_zero()) out.set(j, k, v);
    }
  return out;
}

Tensor2 LieCobracket::cobracket(const Vec& x) const {
  require_same_space(sp_, x.space(), "cobracket");
  Tensor2 out = Tensor2::zero(sp_, sp_);
  for (int i = 0; i < dim(); ++i) {
    const Scalar& c = x.coeff(i);
    if (c.is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k) {
        const Scalar& v = d(i, j, k);
        if (!v.is_zero()) out.add(j, k, c * v);
      }
  }
  return out;
}

LieBialgebra LieBialgebra::make(LieAlgebra alg, LieCobracket cob) {
  require_same_space(alg.space(), cob.space(), "LieBialgebra");
  LieBialgebra b(std::move(alg), std::move(cob));
  require_valid(verify_lie_algebra(b.alg()));
  require_valid(verify_lie_coalgebra(b.cob()));
  require_valid(verify_bialgebra(b));
  return b;
}

LieBialgebra LieBialgebra::unchecked(LieAlgebra alg, LieCobracket cob) {
  require_same_space(alg.space(), cob.space(), "LieBialgebra");
  return LieBialgebra(std::move(alg), std::move(cob));
}

VerificationReport verify_lie_algebra(const LieAlgebra& alg) {
  VerificationReport report("lie-algebra '" + alg.space().name() + "'");
  const int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (alg.c(i, j, k) + alg.c(j, i, k) != Scalar(0))
          report.add("antisymmetry", {i, j, k});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec sum = alg.bracket(alg.bracket_basis(i, j), Vec::basis(alg.space(), k)) +
                  alg.bracket(alg.bracket_basis(j, k), Vec::basis(alg.space(), i)) +
                  alg.bracket(alg.bracket_basis(k, i), Vec::basis(alg.space(), j));
        if (!sum.is_zero()) report.add("jacobi", {i, j, k});
      }
  return report;
}

VerificationReport verify_lie_coalgebra(const LieCobracket& cob) {
  VerificationReport report("lie-coalgebra '" + cob.space().name() + "'");
  const int n = cob.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k)
        if (cob.d(i, j, k) + cob.d(i, k, j) != Scalar(0))
          report.add("anticocommutativity", {i, j, k});
  const Space& s = cob.space();
  for (int i = 0; i < n; ++i) {
    // (delta (x) id)(delta e_i) summed over cyclic rotations.
    Tensor3 t = Tensor3::zero(s, s, s);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& djk = cob.d(i, j, k);
        if (djk.is_zero()) continue;
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Scalar& dpq = cob.d(j, p, q);
            if (!dpq.is_zero()) t.add(p, q, k, djk * dpq);
          }
      }
    Tensor3 rot = t.rotate();
    Tensor3 sum = t + rot + rot.rotate();
    if (!sum.is_zero()) report.add("co-jacobi", {i});
  }
  return report;
}

VerificationReport verify_bialgebra(const LieBialgebra& b) {
  VerificationReport report("bialgebra '" + b.space().name() + "'");
  const int n = b.dim();
  const Space& s = b.space();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Tensor2 lhs = b.cob().cobracket(b.alg().bracket_basis(i, j));
      Tensor2 rhs = ad_extend(b.alg(), Vec::basis(s, i), b.cob().of_basis(j)) -
                    ad_extend(b.alg(), Vec::basis(s, j), b.cob().of_basis(i));
      if (!(lhs == rhs)) report.add("cocycle", {i, j});
    }
  return report;
}

LieBialgebra dualize(const LieBialgebra& b) {
  const int n = b.dim();
  Space dual = b.space().dual();
  std::vector<Scalar> c(static_cast<std::size_t>(n) * n * n);
  std::vector<Scalar> d(static_cast<std::size_t>(n) * n * n);
  auto idx = [n](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * n + j) * n + k;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // <[f^i, f^j], e_k> = <f^i (x) f^j, delta e_k>
        c[idx(i, j, k)] = b.cob().d(k, i, j);
        // <delta f^i, e_j (x) e_k> = <f^i, [e_j, e_k]>
        d[idx(i, j, k)] = b.alg().c(j, k, i);
      }
  return LieBialgebra::make(LieAlgebra::make(dual, std::move(c)),
                            LieCobracket::make(dual, std::move(d)));
}

LieAlgebra opposite(const LieAlgebra& alg) {
  const int n = alg.dim();
  std::vector<Scalar> c(static_cast<std::size_t>(n) * n * n);
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c[p++] = -alg.c(i, j, k);
  return LieAlgebra::make(alg.space(), std::move(c));
}

LinearMap killing_form(const LieAlgebra& alg) {
  const int n = alg.dim();
  std::vector<LinearMap> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(alg.ad(Vec::basis(alg.space(), i)));
  LinearMap k = LinearMap::zero(alg.space(), alg.space().dual());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar trace(0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) trace += ads[i].at(a, b) * ads[j].at(b, a);
      k.set(j, i, trace);
      if (i != j) k.set(i, j, trace);
    }
  return k;
}

Scalar killing_pair(const LinearMap& k, int i, int j) { return k.at(j, i); }

VerificationReport check_homomorphism(const LinearMap& m, const LieAlgebra& src,
                                      const LieAlgebra& dst) {
  require_same_space(m.domain(), src.space(), "check_homomorphism (domain)");
  require_same_space(m.codomain(), dst.space(), "check_homomorphism (codomain)");
  VerificationReport report("homomorphism " + src.space().name() + " -> " + dst.space().name());
  for (int i = 0; i < src.dim(); ++i)
    for (int j = i + 1; j < src.dim(); ++j) {
      Vec lhs = m.apply(src.bracket_basis(i, j));
      Vec rhs = dst.bracket(m.column(i), m.column(j));
      if (!(lhs == rhs)) report.add("bracket-homomorphism", {i, j});
    }
  return report;
}

VerificationReport check_coalgebra_homomorphism(const LinearMap& m, const LieCobracket& src,
                                                const LieCobracket& dst) {
  require_same_space(m.domain(), src.space(), "check_coalgebra_homomorphism (domain)");
  require_same_space(m.codomain(), dst.space(), "check_coalgebra_homomorphism (codomain)");
  VerificationReport report("coalgebra homomorphism " + src.space().name() + " -> " +
                            dst.space().name());
  for (int i = 0; i < src.dim(); ++i) {
    Tensor2 lhs = map_tensor2(m, m, src.of_basis(i));
    Tensor2 rhs = dst.cobracket(m.column(i));
    if (!(lhs == rhs)) report.add("cobracket-homomorphism", {i});
  }
  return report;
}

namespace {

LinearMap basis_matrix(const Space& old_space, const Space& new_space,
                       const std::vector<std::vector<Scalar>>& basis) {
  const int n = old_space.dim();
  if (new_space.dim() != n || static_cast<int>(basis.size()) != n)
    throw PreconditionError("change_of_basis: dimension mismatch");
  LinearMap p = LinearMap::zero(new_space, old_space);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(basis[i].size()) != n)
      throw PreconditionError("change_of_basis: ragged basis matrix");
    for (int a = 0; a < n; ++a) p.set(a, i, basis[i][a]);
  }
  if (p.rank() != n) throw PreconditionError("change_of_basis: basis matrix is singular");
  return p;
}

} // namespace

LieAlgebra change_of_basis(const LieAlgebra& alg, const Space& new_space,
                           const std::vector<std::vector<Scalar>>& basis) {
  const int n = alg.dim();
  LinearMap p = basis_matrix(alg.space(), new_space, basis);
  LinearMap pinv = p.inverse();
  std::vector<Scalar> c(static_cast<std::size_t>(n) * n * n);
  auto idx = [n](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * n + j) * n + k;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec w = pinv.apply(alg.bracket(p.column(i), p.column(j)));
      for (int k = 0; k < n; ++k) c[idx(i, j, k)] = w.coeff(k);
    }
  return LieAlgebra::make(new_space, std::move(c));
}

Tensor2 transport_tensor(const Tensor2& t, const Space& new_space,
                         const std::vector<std::vector<Scalar>>& basis) {
  LinearMap p = basis_matrix(t.left(), new_space, basis);
  LinearMap pinv = p.inverse();
  return map_tensor2(pinv, pinv, t);
}

} // namespace lietriple
