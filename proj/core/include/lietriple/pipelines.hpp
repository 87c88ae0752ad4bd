#pragma once

#include "lietriple/algebra_io.hpp"
#include "lietriple/catalog.hpp"

namespace lietriple {

/// One resolved input for the pipelines: catalog entry or parsed file.
struct AlgebraInput {
  std::string name;
  LieBialgebra bialg;
  std::optional<Tensor2> r;
  std::vector<int> cartan;
  int rank = 0;
  std::string provenance;
};

AlgebraInput input_from_catalog(const CatalogEntry& e);
AlgebraInput input_from_text(const std::string& display_name, const std::string& text);

/// Full axiom suite: Lie algebra, Lie coalgebra, compatibility, and (when r
/// is present) the quasitriangular conditions plus cobracket consistency.
Report run_verify(const AlgebraInput& in);

struct ConstructionOutput {
  Report report;
  std::string algebra_file;
};

/// Drinfel'd double of the input, emitted as an algebra file; the emission
/// is parsed back and re-verified as part of the report.
ConstructionOutput run_double(const AlgebraInput& in);

/// Triple of the input (requires r), emitted and round-trip re-verified.
ConstructionOutput run_triple(const AlgebraInput& in);

/// Every applicable theorem pipeline, with per-check pass/fail/skip lines.
Report run_theorems(const AlgebraInput& in);

} // namespace lietriple
