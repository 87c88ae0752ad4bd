#include "lietriple/catalog.hpp"

#include "lietriple/errors.hpp"

namespace lietriple {

namespace {

std::size_t cidx(int n, int i, int j, int k) {
  return (static_cast<std::size_t>(i) * n + j) * n + k;
}

// Antisymmetric fill: [e_i, e_j] += v e_k and [e_j, e_i] -= v e_k.
void put(std::vector<Scalar>& c, int n, int i, int j, int k, Scalar v) {
  c[cidx(n, i, j, k)] += v;
  c[cidx(n, j, i, k)] -= v;
}

LieBialgebra coboundary_bialgebra(const LieAlgebra& alg, const Tensor2& r) {
  return LieBialgebra::make(alg, coboundary(alg, r));
}

} // namespace

LieAlgebra sl2_algebra() {
  Space s = Space::make("sl2", {"h", "e", "f"});
  std::vector<Scalar> c(27);
  put(c, 3, 0, 1, 1, Scalar(2));  // [h,e] = 2e
  put(c, 3, 0, 2, 2, Scalar(-2)); // [h,f] = -2f
  put(c, 3, 1, 2, 0, Scalar(1));  // [e,f] = h
  return LieAlgebra::make(s, std::move(c));
}

LieAlgebra sl3_algebra() {
  Space s = Space::make("sl3", {"h1", "h2", "e1", "e2", "e3", "f1", "f2", "f3"});
  const int h1 = 0, h2 = 1, e1 = 2, e2 = 3, e3 = 4, f1 = 5, f2 = 6, f3 = 7;
  std::vector<Scalar> c(8 * 8 * 8);
  put(c, 8, h1, e1, e1, Scalar(2));
  put(c, 8, h1, e2, e2, Scalar(-1));
  put(c, 8, h1, e3, e3, Scalar(1));
  put(c, 8, h1, f1, f1, Scalar(-2));
  put(c, 8, h1, f2, f2, Scalar(1));
  put(c, 8, h1, f3, f3, Scalar(-1));
  put(c, 8, h2, e1, e1, Scalar(-1));
  put(c, 8, h2, e2, e2, Scalar(2));
  put(c, 8, h2, e3, e3, Scalar(1));
  put(c, 8, h2, f1, f1, Scalar(1));
  put(c, 8, h2, f2, f2, Scalar(-2));
  put(c, 8, h2, f3, f3, Scalar(-1));
  put(c, 8, e1, e2, e3, Scalar(1));
  put(c, 8, f1, f2, f3, Scalar(-1));
  put(c, 8, e1, f1, h1, Scalar(1));
  put(c, 8, e2, f2, h2, Scalar(1));
  put(c, 8, e3, f3, h1, Scalar(1));
  put(c, 8, e3, f3, h2, Scalar(1));
  put(c, 8, e1, f3, f2, Scalar(-1));
  put(c, 8, e2, f3, f1, Scalar(1));
  put(c, 8, e3, f1, e2, Scalar(-1));
  put(c, 8, e3, f2, e1, Scalar(1));
  return LieAlgebra::make(s, std::move(c));
}

LieAlgebra axb_algebra() {
  Space s = Space::make("axb", {"x", "y"});
  std::vector<Scalar> c(8);
  put(c, 2, 0, 1, 1, Scalar(1)); // [x,y] = y
  return LieAlgebra::make(s, std::move(c));
}

Tensor2 sl2_r_textbook() {
  Space s = sl2_algebra().space();
  Tensor2 r = Tensor2::zero(s, s);
  r.set(1, 2, Scalar(1));    // e (x) f
  r.set(0, 0, Scalar(1, 4)); // 1/4 h (x) h
  return r;
}

Tensor2 sl2_r_catalog() {
  Space s = sl2_algebra().space();
  Tensor2 r = Tensor2::zero(s, s);
  r.set(1, 2, Scalar(1, 4));
  r.set(0, 0, Scalar(1, 16));
  return r;
}

namespace {

Tensor2 sl3_r_catalog(const Space& s) {
  const int h1 = 0, h2 = 1;
  Tensor2 r = Tensor2::zero(s, s);
  for (int a = 0; a < 3; ++a) r.set(2 + a, 5 + a, Scalar(1, 6)); // e_a (x) f_a
  r.set(h1, h1, Scalar(1, 18));
  r.set(h2, h2, Scalar(1, 18));
  r.set(h1, h2, Scalar(1, 36));
  r.set(h2, h1, Scalar(1, 36));
  return r;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;

  {
    Space s = Space::make("abelian2", {"a1", "a2"});
    LieAlgebra alg = LieAlgebra::abelian(s);
    Tensor2 r = Tensor2::zero(s, s);
    entries.push_back(CatalogEntry{
        "abelian2",
        LieBialgebra::make(alg, LieCobracket::zero(s)),
        r,
        {0, 1},
        2,
        "two-dimensional abelian algebra with zero cobracket and r = 0"});
  }

  {
    LieAlgebra alg = axb_algebra();
    Tensor2 r = Tensor2::zero(alg.space(), alg.space());
    r.set(0, 1, Scalar(1));
    r.set(1, 0, Scalar(-1)); // r = x (x) y - y (x) x, triangular
    entries.push_back(CatalogEntry{
        "axb", coboundary_bialgebra(alg, r), r, {}, 0,
        "nonabelian two-dimensional algebra [x,y] = y with the antisymmetric\n"
        "structure r = x(x)y - y(x)x; the symmetric part vanishes"});
  }

  {
    LieAlgebra alg = sl2_algebra();
    Tensor2 r = sl2_r_catalog();
    entries.push_back(CatalogEntry{
        "sl2", coboundary_bialgebra(alg, r), r, {0}, 1,
        "Chevalley basis h, e, f; r = 1/4 e(x)f + 1/16 h(x)h, the standard\n"
        "factorisable structure scaled so its symmetric part inverts the\n"
        "Killing form exactly"});
  }

  {
    LieAlgebra alg = sl3_algebra();
    Tensor2 r = sl3_r_catalog(alg.space());
    entries.push_back(CatalogEntry{
        "sl3", coboundary_bialgebra(alg, r), r, {0, 1}, 2,
        "Chevalley-type basis h1, h2, e1, e2, e3 = [e1,e2], f1, f2, f3; r is\n"
        "the standard factorisable structure scaled by 1/6 so its symmetric\n"
        "part inverts the Killing form exactly"});
  }

  {
    // Compact-form basis of sl2 over Q(i): u1 = -i(e+f)/2, u2 = (f-e)/2,
    // u3 = -ih/2, so [u1,u2] = u3 cyclically.  r is transported from the
    // sl2 entry, which keeps the normalisation identity.
    LieAlgebra sl2 = sl2_algebra();
    Space s = Space::make("su2", {"u1", "u2", "u3"});
    Scalar mi2 = Scalar::imaginary(-1, 2);
    std::vector<std::vector<Scalar>> basis = {
        {Scalar(0), mi2, mi2},
        {Scalar(0), Scalar(-1, 2), Scalar(1, 2)},
        {mi2, Scalar(0), Scalar(0)},
    };
    LieAlgebra alg = change_of_basis(sl2, s, basis);
    Tensor2 r = transport_tensor(sl2_r_catalog(), s, basis);
    entries.push_back(CatalogEntry{
        "su2", coboundary_bialgebra(alg, r), r, {2}, 1,
        "compact-form basis u1 = -i(e+f)/2, u2 = (f-e)/2, u3 = -ih/2 of the\n"
        "sl2 entry with r transported through the same change of basis;\n"
        "bracket constants are real, cobracket constants imaginary"});
  }

  return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  std::string wanted = name;
  if (wanted == "abelian" || wanted == "abelian-2") wanted = "abelian2";
  if (wanted == "ax+b") wanted = "axb";
  for (const auto& e : catalog())
    if (e.name == wanted) return &e;
  return nullptr;
}

QuasitriangularBialgebra catalog_quasitriangular(const CatalogEntry& e) {
  if (!e.r) throw PreconditionError("catalog entry '" + e.name + "' carries no r");
  return QuasitriangularBialgebra::make(e.bialg.alg(), *e.r);
}

} // namespace lietriple
