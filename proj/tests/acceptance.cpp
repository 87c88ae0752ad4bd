// Acceptance suite: one self-contained criterion per section, each printed as
// a single pass/fail line with its runtime.  Every comparison is an exact
// equality over Q(i); there are no tolerances anywhere.
//
// Usage: acceptance [N]   (run criterion N only; default is all)

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "lietriple/constructions.hpp"
#include "lietriple/pipelines.hpp"
#include "lietriple/realforms.hpp"

using namespace lietriple;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

QuasitriangularBialgebra fixture(const char* name) {
  return catalog_quasitriangular(*catalog_find(name));
}

// Shared constructions, built once per process.
const DoubleBosonisation& triple_sl2() {
  static const DoubleBosonisation t = triple(fixture("sl2"));
  return t;
}
const DoubleBosonisation& triple_sl3() {
  static const DoubleBosonisation t = triple(fixture("sl3"));
  return t;
}
const DoubleBosonisation& triple_axb() {
  static const DoubleBosonisation t = triple(fixture("axb"));
  return t;
}

bool check_report(std::string& detail, const std::string& what, const VerificationReport& rep) {
  if (rep.ok()) return true;
  detail += what + ": " + rep.summary() + "; ";
  return false;
}

bool criterion_axioms(std::string& detail) {
  bool ok = true;
  for (const char* name : {"abelian2", "axb", "sl2", "sl3", "su2"}) {
    Report rep = run_verify(input_from_catalog(*catalog_find(name)));
    if (!rep.pass()) {
      detail += std::string(name) + " failed axioms; ";
      ok = false;
    }
  }
  return ok;
}

bool criterion_closed_form(std::string& detail) {
  bool ok = true;
  for (const DoubleBosonisation* t : {&triple_sl2(), &triple_sl3()}) {
    int pairs = 0;
    for (int i = 0; i < t->result.dim(); ++i)
      for (int j = 0; j < t->result.dim(); ++j) {
        Vec u = Vec::basis(t->result.space(), i), v = Vec::basis(t->result.space(), j);
        if (!(triple_explicit_bracket(*t, u, v) == t->result.alg().bracket(u, v))) {
          detail += "mismatch at (" + std::to_string(i) + "," + std::to_string(j) + "); ";
          ok = false;
        }
        ++pairs;
      }
    detail += std::to_string(pairs) + " pairs; ";
  }
  return ok;
}

bool criterion_direct_sum(std::string& detail) {
  bool ok = true;
  ok &= check_report(detail, "sl2 ideals", verify_ideal_decomposition(triple_sl2()));
  ok &= check_report(detail, "sl2 diagonalisation", verify_diagonalisation(triple_sl2()));
  ok &= check_report(detail, "sl3 ideals", verify_ideal_decomposition(triple_sl3()));
  ok &= check_report(detail, "sl3 diagonalisation", verify_diagonalisation(triple_sl3()));
  return ok;
}

bool criterion_twist(std::string& detail) {
  bool ok = true;
  ok &= check_report(detail, "sl2 (81 entries)", twist_identity(triple_sl2()));
  ok &= check_report(detail, "sl3 (576 entries)", twist_identity(triple_sl3()));
  return ok;
}

bool criterion_double_twist(std::string& detail) {
  bool ok = true;
  {
    auto q = fixture("sl2");
    DrinfeldDouble d = drinfeld_double(q.bialg());
    TwistedDoubleSum tds = double_as_twist(q);
    LinearMap m = double_to_twist_map(q, d, tds);
    ok &= check_report(detail, "sl2 bracket hom",
                       check_homomorphism(m, d.result.alg(), tds.result.alg()));
    ok &= check_report(detail, "sl2 cobracket hom",
                       check_coalgebra_homomorphism(m, d.result.cob(), tds.result.cob()));
    if (m.rank() != 6) {
      detail += "sl2 map is not bijective; ";
      ok = false;
    }
  }
  {
    auto q = fixture("axb");
    DrinfeldDouble d = drinfeld_double(q.bialg());
    TwistedDoubleSum tds = double_as_twist(q);
    LinearMap m = double_to_twist_map(q, d, tds);
    ok &= check_report(detail, "axb bracket hom",
                       check_homomorphism(m, d.result.alg(), tds.result.alg()));
    ok &= check_report(detail, "axb cobracket hom",
                       check_coalgebra_homomorphism(m, d.result.cob(), tds.result.cob()));
    if (m.rank() >= 4) {
      detail += "axb map unexpectedly bijective; ";
      ok = false;
    } else {
      detail += "axb isomorphism fails as required (rank " + std::to_string(m.rank()) + "); ";
    }
  }
  return ok;
}

bool criterion_double_relationship(std::string& detail) {
  bool ok = true;
  for (const char* name : {"sl2", "axb"}) {
    auto q = fixture(name);
    DoubleBosonisation tgen = triple_general(q);
    SigmaIso si = sigma_iso(q, tgen);
    ok &= check_report(detail, std::string(name) + " sigma", si.report);
    ok &= check_report(detail, std::string(name) + " dcross",
                       triple_as_dcross_double(q, tgen));
    const DoubleBosonisation& t = std::string(name) == "sl2" ? triple_sl2() : triple_axb();
    ok &= check_report(detail, std::string(name) + " matched pair", matched_pair(t));
    if (std::string(name) == "sl2")
      ok &= check_report(detail, "sl2 general-vs-identified",
                         identify_triples(tgen, t).report);
  }
  ok &= check_report(detail, "sl2 cotwist",
                     triple_as_double_cotwist(fixture("sl2"), triple_sl2()));
  return ok;
}

bool criterion_factorisability(std::string& detail) {
  bool ok = true;
  if (classify(triple_sl2().result) != Classification::Factorisable) {
    detail += "T(sl2) not factorisable; ";
    ok = false;
  }
  if (classify(triple_sl3().result) != Classification::Factorisable) {
    detail += "T(sl3) not factorisable; ";
    ok = false;
  }
  int r2 = rank_of_triple(triple_sl2(), catalog_find("sl2")->cartan);
  int r3 = rank_of_triple(triple_sl3(), catalog_find("sl3")->cartan);
  detail += "ranks " + std::to_string(r2) + " and " + std::to_string(r3) + "; ";
  ok &= r2 == 3 && r3 == 6;
  return ok;
}

bool criterion_triangular(std::string& detail) {
  bool ok = true;
  auto q = fixture("axb");
  ModuleAction ad = ModuleAction::adjoint(q.alg());
  for (int i = 0; i < q.dim(); ++i)
    for (int j = 0; j < q.dim(); ++j)
      if (!infinitesimal_braiding(q, ad, Vec::basis(q.space(), i), Vec::basis(q.space(), j))
               .is_zero()) {
        detail += "braiding nonzero; ";
        ok = false;
      }
  int dim = forced_zero_cobracket(q);
  if (dim != 0) {
    detail += "forced cobracket space has dimension " + std::to_string(dim) + "; ";
    ok = false;
  }
  ok &= check_report(detail, "semidirect structure",
                     triangular_triple_structure(q, triple_axb()));
  return ok;
}

bool criterion_half_real(std::string& detail) {
  bool ok = true;
  auto su2 = fixture("su2");
  ok &= check_report(detail, "half-real form", is_half_real(su2));
  if (!is_real_type(su2)) {
    detail += "su2 not real type; ";
    ok = false;
  }
  ok &= check_report(detail, "real transmutation", real_transmutation_check(su2));
  ok &= check_report(detail, "half-real triple", half_real_triple_check(su2));

  Tensor2 ir = Scalar::i() * su2.r();
  QuasitriangularBialgebra scaled = QuasitriangularBialgebra::make(su2.alg(), ir);
  if (is_real_type(scaled)) {
    detail += "i-scaled r wrongly of real type; ";
    ok = false;
  }
  DoubleBosonisation t = triple_general(scaled);
  bool nonreal = false;
  for (int i = 0; i < t.result.dim() && !nonreal; ++i)
    for (int j = 0; j < t.result.dim() && !nonreal; ++j)
      for (int k = 0; k < t.result.dim() && !nonreal; ++k)
        if (!t.result.alg().c(i, j, k).is_real()) nonreal = true;
  if (!nonreal) {
    detail += "i-scaled triple has no non-real bracket constant; ";
    ok = false;
  }
  return ok;
}

bool criterion_path_independence(std::string& detail) {
  auto q = fixture("sl2");
  const DoubleBosonisation& t = triple_sl2();
  bool ok = true;
  // Route 2: matched-pair reassembly equals the direct construction.
  ok &= check_report(detail, "matched-pair route", matched_pair(t));
  // Route 3: double cross sum with the double, compared through the
  // verified presentation identification.
  DoubleBosonisation tgen = triple_general(q);
  ok &= check_report(detail, "dcross route", triple_as_dcross_double(q, tgen));
  ok &= check_report(detail, "presentation identification", identify_triples(tgen, t).report);
  // Route 4: cocycle twist of the threefold direct sum.
  ok &= check_report(detail, "twist route", twist_identity(t));
  ok &= check_report(detail, "cotwist route", triple_as_double_cotwist(q, t));
  return ok;
}

} // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "axiom suite over the catalog", 1.0, criterion_axioms},
      {2, "closed-form triple bracket equals the assembly", 10.0, criterion_closed_form},
      {3, "ideal decomposition and re-diagonalisation", 10.0, criterion_direct_sum},
      {4, "twisted direct-sum identity", 10.0, criterion_twist},
      {5, "double as a twisted sum", 5.0, criterion_double_twist},
      {6, "double relationship suite", 10.0, criterion_double_relationship},
      {7, "factorisability and rank of the triple", 5.0, criterion_factorisability},
      {8, "triangular suite", 5.0, criterion_triangular},
      {9, "half-real form suite", 5.0, criterion_half_real},
      {10, "construction path independence", 10.0, criterion_path_independence},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  bool all_ok = true;
  for (auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const EngineError& e) {
      detail += std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.budget_seconds) {
      ok = false;
      detail += "over time budget; ";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title;
    if (!detail.empty()) line << " -- " << detail;
    line << " [" << static_cast<long long>(seconds * 1000) << " ms / budget "
         << static_cast<long long>(c.budget_seconds * 1000) << " ms]";
    std::cout << line.str() << "\n";
    all_ok &= ok;
  }
  return all_ok ? 0 : 1;
}
