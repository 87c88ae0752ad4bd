#include "lietriple/braided.hpp"

#include "lietriple/errors.hpp"

namespace lietriple {

ModuleAction::ModuleAction(LieAlgebra g, Space b, std::vector<Scalar> a)
    : g_(std::move(g)), b_(std::move(b)), a_(std::move(a)) {
  const std::size_t want =
      static_cast<std::size_t>(g_.dim()) * b_.dim() * b_.dim();
  if (a_.size() != want)
    throw ConstructionError("action constant array has wrong size for carrier '" + b_.name() + "'");
}

ModuleAction ModuleAction::make(LieAlgebra acting, Space carrier, std::vector<Scalar> a) {
  ModuleAction act(std::move(acting), std::move(carrier), std::move(a));
  require_valid(verify_module_action(act));
  return act;
}

ModuleAction ModuleAction::unchecked(LieAlgebra acting, Space carrier, std::vector<Scalar> a) {
  return ModuleAction(std::move(acting), std::move(carrier), std::move(a));
}

ModuleAction ModuleAction::adjoint(const LieAlgebra& alg) {
  const int n = alg.dim();
  std::vector<Scalar> a(static_cast<std::size_t>(n) * n * n);
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) a[p++] = alg.c(i, j, k);
  return ModuleAction(alg, alg.space(), std::move(a));
}

Vec ModuleAction::act(const Vec& xi, const Vec& x) const {
  require_same_space(g_.space(), xi.space(), "ModuleAction::act (xi)");
  require_same_space(b_, x.space(), "ModuleAction::act (x)");
  Vec out = Vec::zero(b_);
  for (int i = 0; i < g_.dim(); ++i) {
    if (xi.coeff(i).is_zero()) continue;
    for (int j = 0; j < b_.dim(); ++j) {
      if (x.coeff(j).is_zero()) continue;
      Scalar coef = xi.coeff(i) * x.coeff(j);
      for (int k = 0; k < b_.dim(); ++k) {
        const Scalar& v = a(i, j, k);
        if (!v.is_zero()) out.set(k, out.coeff(k) + coef * v);
      }
    }
  }
  return out;
}

Vec ModuleAction::act_basis(int i, int j) const {
  Vec out = Vec::zero(b_);
  for (int k = 0; k < b_.dim(); ++k) out.set(k, a(i, j, k));
  return out;
}

Tensor2 ModuleAction::act2(const Vec& xi, const Tensor2& t) const {
  require_same_space(b_, t.left(), "ModuleAction::act2");
  require_same_space(b_, t.right(), "ModuleAction::act2");
  Tensor2 out = Tensor2::zero(b_, b_);
  for (int i = 0; i < g_.dim(); ++i) {
    if (xi.coeff(i).is_zero()) continue;
    for (int p = 0; p < b_.dim(); ++p)
      for (int q = 0; q < b_.dim(); ++q) {
        const Scalar& tv = t.at(p, q);
        if (tv.is_zero()) continue;
        Scalar coef = xi.coeff(i) * tv;
        for (int k = 0; k < b_.dim(); ++k) {
          const Scalar& av = a(i, p, k);
          if (!av.is_zero()) out.add(k, q, coef * av);
        }
        for (int k = 0; k < b_.dim(); ++k) {
          const Scalar& av = a(i, q, k);
          if (!av.is_zero()) out.add(p, k, coef * av);
        }
      }
  }
  return out;
}

VerificationReport verify_module_action(const ModuleAction& act) {
  VerificationReport report("module action on '" + act.carrier().name() + "'");
  const LieAlgebra& g = act.acting();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      for (int k = 0; k < act.carrier().dim(); ++k) {
        Vec lhs = act.act(g.bracket_basis(i, j), Vec::basis(act.carrier(), k));
        Vec rhs = act.act(Vec::basis(g.space(), i), act.act_basis(j, k)) -
                  act.act(Vec::basis(g.space(), j), act.act_basis(i, k));
        if (!(lhs == rhs)) report.add("action-law", {i, j, k});
      }
  return report;
}

Tensor2 infinitesimal_braiding(const QuasitriangularBialgebra& ambient, const ModuleAction& act,
                               const Vec& a, const Vec& b) {
  require_same_space(act.carrier(), a.space(), "infinitesimal_braiding (a)");
  require_same_space(act.carrier(), b.space(), "infinitesimal_braiding (b)");
  Tensor2 q = ambient.q();
  Tensor2 out = Tensor2::zero(act.carrier(), act.carrier());
  const int n = ambient.dim();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const Scalar& c = q.at(u, v);
      if (c.is_zero()) continue;
      Vec eu = Vec::basis(ambient.space(), u);
      Vec ev = Vec::basis(ambient.space(), v);
      Tensor2 term = tensor_of(act.act(eu, a), act.act(ev, b)) -
                     tensor_of(act.act(eu, b), act.act(ev, a));
      out += c * term;
    }
  return out;
}

BraidedLieBialgebra BraidedLieBialgebra::make(QuasitriangularBialgebra ambient,
                                              ModuleAction action, LieAlgebra alg,
                                              LieCobracket und_cob) {
  BraidedLieBialgebra b(std::move(ambient), std::move(action), std::move(alg),
                        std::move(und_cob));
  require_valid(verify_braided(b));
  return b;
}

BraidedLieBialgebra BraidedLieBialgebra::unchecked(QuasitriangularBialgebra ambient,
                                                   ModuleAction action, LieAlgebra alg,
                                                   LieCobracket und_cob) {
  return BraidedLieBialgebra(std::move(ambient), std::move(action), std::move(alg),
                             std::move(und_cob));
}

VerificationReport verify_braided(const BraidedLieBialgebra& b) {
  VerificationReport report("braided structure on '" + b.carrier().name() + "'");
  require_same_space(b.carrier(), b.action().carrier(), "verify_braided");
  require_same_space(b.carrier(), b.und_cob().space(), "verify_braided");
  report.merge(verify_lie_algebra(b.alg()));
  report.merge(verify_lie_coalgebra(b.und_cob()));
  report.merge(verify_module_action(b.action()));
  const LieAlgebra& g = b.ambient().alg();
  const int ng = g.dim();
  const int nb = b.dim();
  for (int i = 0; i < ng; ++i) {
    Vec xi = Vec::basis(g.space(), i);
    for (int p = 0; p < nb; ++p) {
      for (int q = 0; q < nb; ++q) {
        Vec lhs = b.action().act(xi, b.alg().bracket_basis(p, q));
        Vec rhs = b.alg().bracket(b.action().act_basis(i, p), Vec::basis(b.carrier(), q)) +
                  b.alg().bracket(Vec::basis(b.carrier(), p), b.action().act_basis(i, q));
        if (!(lhs == rhs)) report.add("bracket-covariance", {i, p, q});
      }
      Tensor2 clhs = b.und_cob().cobracket(b.action().act_basis(i, p));
      Tensor2 crhs = b.action().act2(xi, b.und_cob().of_basis(p));
      if (!(clhs == crhs)) report.add("cobracket-covariance", {i, p});
    }
  }
  for (int p = 0; p < nb; ++p)
    for (int q = p + 1; q < nb; ++q) {
      Vec x = Vec::basis(b.carrier(), p);
      Vec y = Vec::basis(b.carrier(), q);
      Tensor2 lhs = cobracket_coboundary(b, x, y);
      Tensor2 rhs = infinitesimal_braiding(b.ambient(), b.action(), x, y);
      if (!(lhs == rhs)) report.add("coboundary-equals-braiding", {p, q});
    }
  return report;
}

Tensor2 cobracket_coboundary(const BraidedLieBialgebra& b, const Vec& x, const Vec& y) {
  return ad_extend(b.alg(), x, b.und_cob().cobracket(y)) -
         ad_extend(b.alg(), y, b.und_cob().cobracket(x)) -
         b.und_cob().cobracket(b.alg().bracket(x, y));
}

BraidedLieBialgebra transmute(const QuasitriangularBialgebra& q) {
  const LieAlgebra& g = q.alg();
  const int n = g.dim();
  Tensor2 sym = q.q();
  std::vector<Scalar> d(static_cast<std::size_t>(n) * n * n);
  auto idx = [n](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * n + j) * n + k;
  };
  for (int i = 0; i < n; ++i)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const Scalar& c = sym.at(u, v);
        if (c.is_zero()) continue;
        for (const auto& [m, cc] : g.bracket_row(i, v)) d[idx(i, u, m)] += c * cc;
      }
  return BraidedLieBialgebra::make(q, ModuleAction::adjoint(g), g,
                                   LieCobracket::make(g.space(), std::move(d)));
}

BraidedLieBialgebra dual_braided(const BraidedLieBialgebra& b) {
  const int n = b.dim();
  const int ng = b.ambient().dim();
  Space dual = b.carrier().dual();
  auto idx = [n](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * n + j) * n + k;
  };
  std::vector<Scalar> c(static_cast<std::size_t>(n) * n * n);
  std::vector<Scalar> d(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c[idx(i, j, k)] = b.und_cob().d(k, i, j);
        d[idx(i, j, k)] = b.alg().c(j, k, i);
      }
  std::vector<Scalar> a(static_cast<std::size_t>(ng) * n * n);
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        a[(static_cast<std::size_t>(i) * n + j) * n + k] = -b.action().a(i, k, j);
  return BraidedLieBialgebra::make(b.ambient(),
                                   ModuleAction::make(b.ambient().alg(), dual, std::move(a)),
                                   LieAlgebra::make(dual, std::move(c)),
                                   LieCobracket::make(dual, std::move(d)));
}

VerificationReport verify_braided_pairing(const PairedBraidedPair& p) {
  VerificationReport report("pairing of '" + p.b.carrier().name() + "' and '" +
                            p.c.carrier().name() + "'");
  const int n = p.b.dim();
  if (p.c.dim() != n) {
    report.add("pairing-shape", {n, p.c.dim()});
    return report;
  }
  if (p.pairing.rank() != n) report.add("pairing-nondegenerate", {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // <[e_i, e_j], f_k> = <e_i (x) e_j, delta f_k>
        Scalar lhs(0);
        for (const auto& [m, cc] : p.b.alg().bracket_row(i, j)) lhs += cc * p.pair(m, k);
        Scalar rhs(0);
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t) {
            const Scalar& d = p.c.und_cob().d(k, s, t);
            if (!d.is_zero()) rhs += d * p.pair(i, s) * p.pair(j, t);
          }
        if (lhs != rhs) report.add("pairing-bracket-cobracket", {i, j, k});
        // <e_i, [f_j, f_k]> = <delta e_i, f_j (x) f_k>
        Scalar lhs2(0);
        for (const auto& [m, cc] : p.c.alg().bracket_row(j, k)) lhs2 += cc * p.pair(i, m);
        Scalar rhs2(0);
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t) {
            const Scalar& d = p.b.und_cob().d(i, s, t);
            if (!d.is_zero()) rhs2 += d * p.pair(s, j) * p.pair(t, k);
          }
        if (lhs2 != rhs2) report.add("pairing-cobracket-bracket", {i, j, k});
      }
  const LieAlgebra& g = p.b.ambient().alg();
  for (int x = 0; x < g.dim(); ++x)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        Scalar sum(0);
        Vec bi = p.b.action().act_basis(x, i);
        Vec ck = p.c.action().act_basis(x, k);
        for (int m = 0; m < n; ++m) {
          if (!bi.coeff(m).is_zero()) sum += bi.coeff(m) * p.pair(m, k);
          if (!ck.coeff(m).is_zero()) sum += ck.coeff(m) * p.pair(i, m);
        }
        if (!sum.is_zero()) report.add("pairing-invariance", {x, i, k});
      }
  return report;
}

PairedBraidedPair evaluation_pair(const BraidedLieBialgebra& b) {
  BraidedLieBialgebra c = dual_braided(b);
  LinearMap eval = LinearMap::zero(b.carrier(), c.carrier().dual());
  for (int i = 0; i < b.dim(); ++i) eval.set(i, i, Scalar(1));
  PairedBraidedPair p{b, std::move(c), std::move(eval)};
  require_valid(verify_braided_pairing(p));
  return p;
}

PairedBraidedPair self_pairing_factorisable(const QuasitriangularBialgebra& q,
                                            const BraidedLieBialgebra& transmuted) {
  if (classify(q) != Classification::Factorisable)
    throw PreconditionError("self-pairing requires a factorisable structure on '" +
                            q.space().name() + "'");
  LinearMap k = killing_form(q.alg());
  LinearMap qmap = tensor_as_map(q.q());
  LinearMap composed = k.compose(qmap);
  if (!(composed == LinearMap::identity(q.space().dual())))
    throw PreconditionError(
        "normalisation identity fails on '" + q.space().name() +
        "': the symmetric part of r does not invert the Killing form");
  // Pairing of the two adjoint copies by the Killing form; the carrier of the
  // second copy is the same space, so K: g -> g* is already b -> c*.
  PairedBraidedPair p{transmuted, transmuted, k};
  require_valid(verify_braided_pairing(p));
  return p;
}

int forced_zero_cobracket(const QuasitriangularBialgebra& q) {
  if (classify(q) != Classification::Triangular)
    throw PreconditionError("forced_zero_cobracket requires a triangular structure");
  const LieAlgebra& g = q.alg();
  const int n = g.dim();
  const int unknowns = n * n * n;
  auto u = [n](int i, int j, int k) { return (i * n + j) * n + k; };
  std::vector<std::vector<Scalar>> rows;
  auto fresh = [unknowns]() { return std::vector<Scalar>(unknowns); };

  // Anticocommutativity of the candidate cobracket.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        auto row = fresh();
        row[u(i, j, k)] += Scalar(1);
        row[u(i, k, j)] += Scalar(1);
        rows.push_back(std::move(row));
      }

  // Covariance: delta([e_a, e_i]) = ad_a-extension of delta(e_i).
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < n; ++p)
        for (int qq = 0; qq < n; ++qq) {
          auto row = fresh();
          for (const auto& [m, cc] : g.bracket_row(a, i)) row[u(m, p, qq)] += cc;
          for (int j = 0; j < n; ++j) {
            const Scalar& cjp = g.c(a, j, p);
            if (!cjp.is_zero()) row[u(i, j, qq)] -= cjp;
            const Scalar& cjq = g.c(a, j, qq);
            if (!cjq.is_zero()) row[u(i, p, j)] -= cjq;
          }
          rows.push_back(std::move(row));
        }

  // Zero coboundary: ad_a(delta e_b) - ad_b(delta e_a) - delta([e_a, e_b]) = 0.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int p = 0; p < n; ++p)
        for (int qq = 0; qq < n; ++qq) {
          auto row = fresh();
          for (int j = 0; j < n; ++j) {
            const Scalar& cap = g.c(a, j, p);
            if (!cap.is_zero()) row[u(b, j, qq)] += cap;
            const Scalar& caq = g.c(a, j, qq);
            if (!caq.is_zero()) row[u(b, p, j)] += caq;
            const Scalar& cbp = g.c(b, j, p);
            if (!cbp.is_zero()) row[u(a, j, qq)] -= cbp;
            const Scalar& cbq = g.c(b, j, qq);
            if (!cbq.is_zero()) row[u(a, p, j)] -= cbq;
          }
          for (const auto& [m, cc] : g.bracket_row(a, b)) row[u(m, p, qq)] -= cc;
          rows.push_back(std::move(row));
        }

  return nullspace_dimension(rows, unknowns);
}

} // namespace lietriple
