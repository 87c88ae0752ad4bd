#include "lietriple/pipelines.hpp"

#include <chrono>

#include "lietriple/constructions.hpp"
#include "lietriple/errors.hpp"
#include "lietriple/realforms.hpp"

namespace lietriple {

namespace {

class Stopwatch {
public:
  long long ms() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string input_fingerprint(const AlgebraInput& in) {
  return fingerprint64(emit_algebra_file(in.name, in.bialg, in.r));
}

bool algebra_is_abelian(const LieAlgebra& g) {
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      if (!g.bracket_row(i, j).empty()) return false;
  return true;
}

void verify_into(Report& rep, const AlgebraInput& in) {
  rep.add("lie-algebra", verify_lie_algebra(in.bialg.alg()));
  rep.add("lie-coalgebra", verify_lie_coalgebra(in.bialg.cob()));
  rep.add("bialgebra-cocycle", verify_bialgebra(in.bialg));
  if (in.r) {
    rep.add("quasitriangular", verify_quasitriangular(in.bialg.alg(), *in.r));
    LieCobracket derived = coboundary(in.bialg.alg(), *in.r);
    if (derived == in.bialg.cob())
      rep.add_pass("cobracket-matches-r");
    else
      rep.add_fail("cobracket-matches-r", "stored cobracket is not the coboundary of r");
  }
}

} // namespace

AlgebraInput input_from_catalog(const CatalogEntry& e) {
  return AlgebraInput{"catalog:" + e.name, e.bialg, e.r, e.cartan, e.rank, e.provenance};
}

AlgebraInput input_from_text(const std::string& display_name, const std::string& text) {
  AlgebraFile file = parse_algebra_file(text);
  RealisedAlgebra real = realise(file);
  return AlgebraInput{display_name, std::move(real.bialg), std::move(real.r), {}, 0, {}};
}

Report run_verify(const AlgebraInput& in) {
  Stopwatch sw;
  Report rep;
  rep.construction = "verify";
  rep.input_name = in.name;
  rep.fingerprint = input_fingerprint(in);
  verify_into(rep, in);
  rep.time_ms = sw.ms();
  return rep;
}

namespace {

ConstructionOutput run_construction(const AlgebraInput& in, const std::string& what) {
  if (what == "triple" && !in.r)
    throw PreconditionError("the triple requires a quasitriangular input (r)");
  Stopwatch sw;
  Report rep;
  rep.construction = what;
  rep.input_name = in.name;
  rep.fingerprint = input_fingerprint(in);
  std::string emitted;
  verify_into(rep, in);
  if (!rep.pass()) {
    rep.time_ms = sw.ms();
    return ConstructionOutput{std::move(rep), ""};
  }
  try {
    LieBialgebra valid = LieBialgebra::make(in.bialg.alg(), in.bialg.cob());
    std::string name;
    std::string provenance;
    LieBialgebra result = valid;
    std::optional<Tensor2> result_r;
    if (what == "double") {
      DrinfeldDouble d = drinfeld_double(valid);
      name = "double-of-" + in.name;
      result = d.result.bialg();
      result_r = d.result.r();
      provenance = "Drinfel'd double of " + in.name;
    } else {
      QuasitriangularBialgebra q = QuasitriangularBialgebra::make(valid.alg(), *in.r);
      DoubleBosonisation t = triple(q);
      name = "triple-of-" + in.name;
      result = t.result.bialg();
      result_r = t.result.r();
      provenance = std::string("triple of ") + in.name + " (" +
                   (t.identified ? "self-paired through the Killing form"
                                 : "paired against the canonical dual") +
                   ")";
    }
    rep.add_pass("construct", name);
    std::string clean_name = name;
    for (char& ch : clean_name)
      if (ch == ':') ch = '-';
    emitted = emit_algebra_file(clean_name, result, result_r, provenance);
    AlgebraInput back = input_from_text("emitted:" + clean_name, emitted);
    Report reverify = run_verify(back);
    if (reverify.pass())
      rep.add_pass("emitted-file-reverifies");
    else
      rep.add_fail("emitted-file-reverifies", "round-trip verification failed");
  } catch (const EngineError& e) {
    rep.add_fail("construct", e.what());
  }
  rep.time_ms = sw.ms();
  return ConstructionOutput{std::move(rep), std::move(emitted)};
}

} // namespace

ConstructionOutput run_double(const AlgebraInput& in) { return run_construction(in, "double"); }

ConstructionOutput run_triple(const AlgebraInput& in) { return run_construction(in, "triple"); }

Report run_theorems(const AlgebraInput& in) {
  Stopwatch sw;
  Report rep;
  rep.construction = "theorems";
  rep.input_name = in.name;
  rep.fingerprint = input_fingerprint(in);
  verify_into(rep, in);
  if (!rep.pass() || !in.r) {
    if (!in.r) rep.add_skip("quasitriangular-suite", "input carries no r");
    rep.time_ms = sw.ms();
    return rep;
  }

  QuasitriangularBialgebra q = QuasitriangularBialgebra::make(in.bialg.alg(), *in.r);
  Classification cls = classify(q);
  rep.add_pass("classification", to_string(cls));
  const bool factorisable = cls == Classification::Factorisable;
  const bool triangular = cls == Classification::Triangular;
  const bool abelian = algebra_is_abelian(q.alg());

  auto guard = [&rep](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const EngineError& e) {
      rep.add_fail(name, e.what());
    }
  };

  try {
    DrinfeldDouble dbl = drinfeld_double(q.bialg());
    rep.add_pass("double-construction");
    TwistedDoubleSum tds = double_as_twist(q);
    rep.add_pass("double-as-twist");
    LinearMap m = double_to_twist_map(q, dbl, tds);
    VerificationReport hom("double -> twisted sum");
    hom.merge(check_homomorphism(m, dbl.result.alg(), tds.result.alg()));
    hom.merge(check_coalgebra_homomorphism(m, dbl.result.cob(), tds.result.cob()));
    rep.add("double-twist-homomorphism", hom);
    const bool iso = m.rank() == dbl.result.dim();
    if (factorisable == iso)
      rep.add_pass("double-twist-isomorphism",
                   iso ? "bijective" : "not bijective, as expected off the factorisable case");
    else
      rep.add_fail("double-twist-isomorphism",
                   "rank " + std::to_string(m.rank()) + " of " +
                       std::to_string(dbl.result.dim()));
  } catch (const EngineError& e) {
    rep.add_fail("double-construction", e.what());
  }

  DoubleBosonisation t = triple(q);
  rep.add_pass("triple-construction", std::to_string(t.result.dim()) + "-dimensional");
  guard("matched-pair", [&] { rep.add("matched-pair", matched_pair(t)); });

  DoubleBosonisation tgen = t.identified ? triple_general(q) : t;
  if (t.identified)
    guard("triple-presentation-identification", [&] {
      rep.add("triple-presentation-identification", identify_triples(tgen, t).report);
    });
  guard("sigma-isomorphism", [&] {
    SigmaIso si = sigma_iso(q, tgen);
    rep.add("sigma-isomorphism", si.report);
  });
  guard("triple-as-dcross-double",
        [&] { rep.add("triple-as-dcross-double", triple_as_dcross_double(q, tgen)); });

  if (factorisable) {
    guard("triple-closed-form-bracket", [&] {
      VerificationReport oracle("closed-form bracket");
      for (int i = 0; i < t.result.dim(); ++i)
        for (int j = i + 1; j < t.result.dim(); ++j) {
          Vec u = Vec::basis(t.result.space(), i);
          Vec v = Vec::basis(t.result.space(), j);
          if (!(triple_explicit_bracket(t, u, v) == t.result.alg().bracket(u, v)))
            oracle.add("closed-form-vs-assembled", {i, j});
        }
      rep.add("triple-closed-form-bracket", oracle);
    });
    guard("ideal-decomposition",
          [&] { rep.add("ideal-decomposition", verify_ideal_decomposition(t)); });
    guard("direct-sum-diagonalisation",
          [&] { rep.add("direct-sum-diagonalisation", verify_diagonalisation(t)); });
    guard("twist-identity", [&] { rep.add("twist-identity", twist_identity(t)); });
    guard("triple-as-double-cotwist",
          [&] { rep.add("triple-as-double-cotwist", triple_as_double_cotwist(q, t)); });
    if (!in.cartan.empty()) {
      guard("triple-rank", [&] {
        int r3 = rank_of_triple(t, in.cartan);
        if (r3 == 3 * in.rank)
          rep.add_pass("triple-rank", std::to_string(r3) + " = 3 x " + std::to_string(in.rank));
        else
          rep.add_fail("triple-rank",
                       std::to_string(r3) + " != 3 x " + std::to_string(in.rank));
      });
    } else {
      rep.add_skip("triple-rank", "no Cartan metadata for this input");
    }
  } else {
    rep.add_skip("triple-closed-form-bracket", "not applicable: factorisable inputs only");
    rep.add_skip("ideal-decomposition", "not applicable: factorisable inputs only");
    rep.add_skip("direct-sum-diagonalisation", "not applicable: factorisable inputs only");
    rep.add_skip("twist-identity", "not applicable: factorisable inputs only");
    rep.add_skip("triple-as-double-cotwist", "not applicable: factorisable inputs only");
    rep.add_skip("triple-rank", "not applicable: factorisable inputs only");
  }

  if (triangular) {
    guard("triangular-zero-braiding", [&] {
      VerificationReport psi_zero("vanishing braiding");
      ModuleAction ad = ModuleAction::adjoint(q.alg());
      for (int i = 0; i < q.dim(); ++i)
        for (int j = i + 1; j < q.dim(); ++j)
          if (!infinitesimal_braiding(q, ad, Vec::basis(q.space(), i), Vec::basis(q.space(), j))
                   .is_zero())
            psi_zero.add("braiding-nonzero", {i, j});
      rep.add("triangular-zero-braiding", psi_zero);
    });
    guard("forced-zero-cobracket", [&] {
      int dim = forced_zero_cobracket(q);
      if (abelian)
        rep.add_pass("forced-zero-cobracket",
                     "abelian input outside the lemma hypothesis; solution dimension " +
                         std::to_string(dim));
      else if (dim == 0)
        rep.add_pass("forced-zero-cobracket", "only the zero cobracket is covariant");
      else
        rep.add_fail("forced-zero-cobracket", "solution dimension " + std::to_string(dim));
    });
    if (!abelian)
      guard("triangular-semidirect-structure", [&] {
        rep.add("triangular-semidirect-structure", triangular_triple_structure(q, t));
      });
    else
      rep.add_skip("triangular-semidirect-structure", "not applicable: requires a non-abelian algebra");
  } else {
    rep.add_skip("triangular-zero-braiding", "not applicable: triangular inputs only");
    rep.add_skip("forced-zero-cobracket", "not applicable: triangular inputs only");
    rep.add_skip("triangular-semidirect-structure", "not applicable: triangular inputs only");
  }

  if (is_half_real(q).ok()) {
    rep.add_pass("half-real-form");
    if (is_real_type(q)) {
      rep.add_pass("real-type");
      guard("real-transmutation",
            [&] { rep.add("real-transmutation", real_transmutation_check(q)); });
      guard("half-real-triple", [&] { rep.add("half-real-triple", half_real_triple_check(q)); });
    } else {
      rep.add_skip("real-transmutation", "not applicable: r is not of real type");
      rep.add_skip("half-real-triple", "not applicable: r is not of real type");
    }
  } else {
    rep.add_skip("half-real-form", "not applicable: input is not a half-real form");
    rep.add_skip("real-type", "not applicable: input is not a half-real form");
    rep.add_skip("real-transmutation", "not applicable: input is not a half-real form");
    rep.add_skip("half-real-triple", "not applicable: input is not a half-real form");
  }

  rep.time_ms = sw.ms();
  return rep;
}

} // namespace lietriple
