#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lietriple/rmatrix.hpp"

namespace lietriple {

/// A built-in example with provenance notes and, where meaningful, the
/// Cartan data used by the rank checks.
struct CatalogEntry {
  std::string name;
  LieBialgebra bialg;
  std::optional<Tensor2> r;
  std::vector<int> cartan;
  int rank = 0;
  std::string provenance;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

/// Entry as a quasitriangular structure; requires r.
QuasitriangularBialgebra catalog_quasitriangular(const CatalogEntry& e);

/// Building blocks, also used directly by tests.
LieAlgebra sl2_algebra();
LieAlgebra sl3_algebra();
LieAlgebra axb_algebra();

/// The textbook-normalised sl2 structure e (x) f + 1/4 h (x) h.  The catalog
/// entry carries this scaled by 1/4 so that the symmetric part inverts the
/// Killing form exactly.
Tensor2 sl2_r_textbook();
Tensor2 sl2_r_catalog();

} // namespace lietriple
