#include "lietriple/tensor.hpp"

#include <set>
#include <sstream>

#include "lietriple/liealg.hpp"

namespace lietriple {

Space Space::make(std::string name, std::vector<std::string> labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw ConstructionError("space '" + name + "' has repeated basis labels");
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->labels = std::move(labels);
  return Space(std::move(d));
}

Space Space::dual() const {
  std::vector<std::string> labels;
  labels.reserve(d_->labels.size());
  for (const auto& l : d_->labels) labels.push_back(l + "*");
  return make(d_->name + "*", std::move(labels));
}

void require_same_space(const Space& a, const Space& b, const char* where) {
  if (a != b)
    throw SpaceMismatchError(std::string(where) + ": expected space '" + a.name() +
                             "', got '" + b.name() + "'");
}

Vec Vec::basis(const Space& s, int i) {
  Vec v(s);
  v.set(i, Scalar(1));
  return v;
}

bool Vec::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

Vec& Vec::operator+=(const Vec& o) {
  require_same_space(sp_, o.sp_, "Vec::operator+=");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require_same_space(sp_, o.sp_, "Vec::operator-=");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Vec Vec::operator-() const {
  Vec v = *this;
  for (auto& c : v.c_) c = -c;
  return v;
}

std::string Vec::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[i].str() << ")" << sp_.label(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool Tensor2::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  require_same_space(l_, o.l_, "Tensor2::operator+= (left)");
  require_same_space(r_, o.r_, "Tensor2::operator+= (right)");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  require_same_space(l_, o.l_, "Tensor2::operator-= (left)");
  require_same_space(r_, o.r_, "Tensor2::operator-= (right)");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Tensor2& Tensor2::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Tensor2 Tensor2::operator-() const {
  Tensor2 t = *this;
  for (auto& c : t.c_) c = -c;
  return t;
}

std::string Tensor2::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < l_.dim(); ++i)
    for (int j = 0; j < r_.dim(); ++j) {
      const Scalar& s = at(i, j);
      if (s.is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << s.str() << ")" << l_.label(i) << "(x)" << r_.label(j);
      first = false;
    }
  if (first) os << "0";
  return os.str();
}

bool Tensor3::is_zero() const {
  for (const auto& s : v_)
    if (!s.is_zero()) return false;
  return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  require_same_space(a_, o.a_, "Tensor3::operator+=");
  require_same_space(b_, o.b_, "Tensor3::operator+=");
  require_same_space(c_, o.c_, "Tensor3::operator+=");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  require_same_space(a_, o.a_, "Tensor3::operator-=");
  require_same_space(b_, o.b_, "Tensor3::operator-=");
  require_same_space(c_, o.c_, "Tensor3::operator-=");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

Tensor3 Tensor3::rotate() const {
  Tensor3 out(c_, a_, b_);
  for (int i = 0; i < a_.dim(); ++i)
    for (int j = 0; j < b_.dim(); ++j)
      for (int k = 0; k < c_.dim(); ++k) {
        const Scalar& s = at(i, j, k);
        if (!s.is_zero()) out.set(k, i, j, s);
      }
  return out;
}

Tensor2 flip(const Tensor2& t) {
  Tensor2 out = Tensor2::zero(t.right(), t.left());
  for (int i = 0; i < t.left().dim(); ++i)
    for (int j = 0; j < t.right().dim(); ++j) {
      const Scalar& s = t.at(i, j);
      if (!s.is_zero()) out.set(j, i, s);
    }
  return out;
}

Tensor2 tensor_of(const Vec& a, const Vec& b) {
  Tensor2 out = Tensor2::zero(a.space(), b.space());
  for (int i = 0; i < a.dim(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j < b.dim(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      out.set(i, j, a.coeff(i) * b.coeff(j));
    }
  }
  return out;
}

Tensor3 embed12(const Tensor2& t, const Space& third) {
  Tensor3 out = Tensor3::zero(t.left(), t.right(), third);
  // Slot assignment only; the omitted slot carries no unit element.
  return out;
}

Tensor3 embed13(const Tensor2& t, const Space& third) {
  return Tensor3::zero(t.left(), third, t.right());
}

Tensor3 embed23(const Tensor2& t, const Space& third) {
  return Tensor3::zero(third, t.left(), t.right());
}

Tensor3 schouten_term(const Tensor2& r, const Tensor2& s, SchoutenSlots slots,
                      const LieAlgebra& alg) {
  const Space& g = alg.space();
  require_same_space(g, r.left(), "schouten_term (r left)");
  require_same_space(g, r.right(), "schouten_term (r right)");
  require_same_space(g, s.left(), "schouten_term (s left)");
  require_same_space(g, s.right(), "schouten_term (s right)");
  const int n = g.dim();
  Tensor3 out = Tensor3::zero(g, g, g);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& rc = r.at(a, b);
      if (rc.is_zero()) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const Scalar& sc = s.at(c, d);
          if (sc.is_zero()) continue;
          Scalar coef = rc * sc;
          switch (slots) {
            case SchoutenSlots::S12_13:
              // [r(1), s(1)] (x) r(2) (x) s(2)
              for (const auto& [m, cc] : alg.bracket_row(a, c)) out.add(m, b, d, coef * cc);
              break;
            case SchoutenSlots::S12_23:
              // r(1) (x) [r(2), s(1)] (x) s(2)
              for (const auto& [m, cc] : alg.bracket_row(b, c)) out.add(a, m, d, coef * cc);
              break;
            case SchoutenSlots::S13_23:
              // r(1) (x) s(1) (x) [r(2), s(2)]
              for (const auto& [m, cc] : alg.bracket_row(b, d)) out.add(a, c, m, coef * cc);
              break;
          }
        }
    }
  return out;
}

Tensor2 ad_extend(const LieAlgebra& alg, const Vec& x, const Tensor2& t) {
  const Space& g = alg.space();
  require_same_space(g, x.space(), "ad_extend (x)");
  require_same_space(g, t.left(), "ad_extend (t left)");
  require_same_space(g, t.right(), "ad_extend (t right)");
  const int n = g.dim();
  Tensor2 out = Tensor2::zero(g, g);
  for (int a = 0; a < n; ++a) {
    const Scalar& xc = x.coeff(a);
    if (xc.is_zero()) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Scalar& tc = t.at(i, j);
        if (tc.is_zero()) continue;
        Scalar coef = xc * tc;
        for (const auto& [m, cc] : alg.bracket_row(a, i)) out.add(m, j, coef * cc);
        for (const auto& [m, cc] : alg.bracket_row(a, j)) out.add(i, m, coef * cc);
      }
  }
  return out;
}

Tensor3 ad_extend3(const LieAlgebra& alg, const Vec& x, const Tensor3& t) {
  const Space& g = alg.space();
  require_same_space(g, x.space(), "ad_extend3 (x)");
  require_same_space(g, t.first(), "ad_extend3 (t)");
  require_same_space(g, t.second(), "ad_extend3 (t)");
  require_same_space(g, t.third(), "ad_extend3 (t)");
  const int n = g.dim();
  Tensor3 out = Tensor3::zero(g, g, g);
  for (int a = 0; a < n; ++a) {
    const Scalar& xc = x.coeff(a);
    if (xc.is_zero()) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Scalar& tc = t.at(i, j, k);
          if (tc.is_zero()) continue;
          Scalar coef = xc * tc;
          for (const auto& [m, cc] : alg.bracket_row(a, i)) out.add(m, j, k, coef * cc);
          for (const auto& [m, cc] : alg.bracket_row(a, j)) out.add(i, m, k, coef * cc);
          for (const auto& [m, cc] : alg.bracket_row(a, k)) out.add(i, j, m, coef * cc);
        }
  }
  return out;
}

} // namespace lietriple
