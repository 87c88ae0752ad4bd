#include <doctest.h>

#include "lietriple/pipelines.hpp"
#include "test_support.hpp"

using namespace lietriple;

TEST_CASE("parse a small algebra file") {
  const std::string text =
      "# the nonabelian 2-dim algebra\n"
      "name axb\n"
      "dim 2\n"
      "basis x y\n"
      "bracket 0 1 -> 1 : 1\n"
      "cobracket 0 -> 0 1 : 1\n"
      "r 0 1 : 1\n"
      "r 1 0 : -1\n";
  AlgebraFile file = parse_algebra_file(text);
  CHECK(file.name == "axb");
  CHECK(file.dim == 2);
  RealisedAlgebra real = realise(file);
  // Antisymmetric completion fills [y,x] = -y and the flipped cobracket leg.
  CHECK(real.bialg.alg().c(1, 0, 1) == Scalar(-1));
  CHECK(real.bialg.cob().d(0, 1, 0) == Scalar(-1));
  REQUIRE(real.r.has_value());
  CHECK(verify_lie_algebra(real.bialg.alg()).ok());
  CHECK(verify_bialgebra(real.bialg).ok());
  CHECK(verify_quasitriangular(real.bialg.alg(), *real.r).ok());
}

TEST_CASE("empty bracket section gives an abelian algebra") {
  AlgebraFile file = parse_algebra_file("name flat\ndim 3\n");
  RealisedAlgebra real = realise(file);
  CHECK(verify_lie_algebra(real.bialg.alg()).ok());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(real.bialg.alg().bracket_row(i, j).empty());
  CHECK_FALSE(real.r.has_value());
}

TEST_CASE("parse diagnostics carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_algebra_file("dim 2\nbracket 0 5 -> 1 : 1\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("dim 2\nbracket 0 1 : 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("dim 2\nbracket 0 1 -> 0 : oops\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("bracket 0 1 -> 0 : 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("dim 2\nbasis a\n"), ParseError);

  // All problems are reported in one pass, each with its own line.
  try {
    parse_algebra_file("dim 2\nbracket 9 0 -> 0 : 1\nwhat 1\nr 0 0 : 1/0\n");
    CHECK(false);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("line 4") != std::string::npos);
  }
}

TEST_CASE("axiom violations in files are data, not parse errors") {
  // c[0][0][1] = 1 breaks antisymmetry; it parses fine and verifies false.
  AlgebraFile file = parse_algebra_file("dim 2\nbracket 0 0 -> 1 : 1\n");
  RealisedAlgebra real = realise(file);
  VerificationReport rep = verify_lie_algebra(real.bialg.alg());
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations()[0].check == "antisymmetry");
}

TEST_CASE("emission round-trips to identical data") {
  for (const auto& entry : catalog()) {
    std::string text = emit_algebra_file(entry.name, entry.bialg, entry.r, entry.provenance);
    AlgebraFile file = parse_algebra_file(text);
    RealisedAlgebra real = realise(file);
    CHECK(real.bialg == entry.bialg);
    if (entry.r) {
      REQUIRE(real.r.has_value());
      CHECK(*real.r == *entry.r);
    }
    // Canonical emission is a fixed point.
    CHECK(emit_algebra_file(entry.name, real.bialg, real.r, entry.provenance) == text);
  }
}

TEST_CASE("verify pipeline on the catalog") {
  for (const auto& entry : catalog()) {
    Report rep = run_verify(input_from_catalog(entry));
    CHECK(rep.pass());
  }
}

TEST_CASE("construction pipelines emit files that re-verify") {
  const auto* sl2 = catalog_find("sl2");
  ConstructionOutput d = run_double(input_from_catalog(*sl2));
  CHECK(d.report.pass());
  CHECK_FALSE(d.algebra_file.empty());
  AlgebraInput back = input_from_text("again", d.algebra_file);
  CHECK(run_verify(back).pass());

  ConstructionOutput t = run_triple(input_from_catalog(*sl2));
  CHECK(t.report.pass());
  AlgebraInput tback = input_from_text("again", t.algebra_file);
  CHECK(run_verify(tback).pass());
}

TEST_CASE("machine report format is stable modulo timing") {
  const auto* axb = catalog_find("axb");
  Report a = run_verify(input_from_catalog(*axb));
  Report b = run_verify(input_from_catalog(*axb));
  a.time_ms = 0;
  b.time_ms = 0;
  CHECK(a.machine() == b.machine());
  CHECK(a.machine().find("report-format 1\n") == 0);
}
