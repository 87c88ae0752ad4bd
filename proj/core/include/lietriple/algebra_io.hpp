#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lietriple/liealg.hpp"

namespace lietriple {

/// Line-oriented algebra description: one structure constant per line.
///
///   name sl2
///   dim 3
///   basis h e f
///   bracket 0 1 -> 1 : 2        # [e_0, e_1] += 2 e_1
///   cobracket 1 -> 1 0 : 1/2    # delta e_1 += 1/2 e_1 (x) e_0
///   r 1 2 : 1/4
///
/// Indices are zero-based.  When only one orientation of a bracket pair (or
/// cobracket leg pair) is present the antisymmetric counterpart is implied;
/// writing both sides inconsistently is preserved verbatim so the axiom
/// checks can report it.
struct AlgebraFile {
  struct Entry3 {
    int i, j, k;
    Scalar v;
  };
  struct Entry2 {
    int i, j;
    Scalar v;
  };
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<Entry3> brackets;
  std::vector<Entry3> cobrackets; // i -> (j, k)
  std::vector<Entry2> r;
  bool has_r = false;
};

/// Throws ParseError with a line number on syntax errors and out-of-range
/// indices.  Axiom violations are not parse errors.
AlgebraFile parse_algebra_file(const std::string& text);

/// Unchecked realisation; axiom verification is a separate step.
struct RealisedAlgebra {
  LieBialgebra bialg;
  std::optional<Tensor2> r;
};
RealisedAlgebra realise(const AlgebraFile& file);

/// Canonical emission: sorted entries, one orientation per pair, reduced
/// scalars.  parse(emit(x)) realises to identical data.
std::string emit_algebra_file(const std::string& name, const LieBialgebra& bialg,
                              const std::optional<Tensor2>& r,
                              const std::string& provenance = {});

/// FNV-1a 64-bit hex digest, used as the input fingerprint in reports.
std::string fingerprint64(const std::string& text);

/// Outcome of one named check inside a report.
struct CheckResult {
  enum class Status { Pass, Fail, Skip };
  std::string name;
  Status status;
  std::string detail;
};

/// Aggregated result of a pipeline run over one input.
struct Report {
  std::string construction;
  std::string input_name;
  std::string fingerprint;
  std::vector<CheckResult> checks;
  long long time_ms = 0;

  void add_pass(std::string name, std::string detail = {});
  void add_fail(std::string name, std::string detail = {});
  void add_skip(std::string name, std::string detail = {});
  /// Pass/fail from a verification report; failure detail is its summary.
  void add(std::string name, const VerificationReport& rep);

  bool pass() const;
  int failures() const;
  std::string human() const;
  /// Stable line format; byte-identical for identical inputs apart from the
  /// trailing time-ms line.
  std::string machine() const;
};

} // namespace lietriple
