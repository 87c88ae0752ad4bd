#pragma once

#include "lietriple/constructions.hpp"

namespace lietriple {

/// Lists every bracket constant with a nonzero imaginary part and every
/// cobracket constant with a nonzero real part.
VerificationReport is_half_real(const QuasitriangularBialgebra& q);

/// True exactly when every entry of the symmetric part of r is real.
bool is_real_type(const QuasitriangularBialgebra& q);

/// For a half-real form of real type: the transmutation has all-real bracket
/// and braided-cobracket constants, and is self-dual through the symmetric
/// part of r.
VerificationReport real_transmutation_check(const QuasitriangularBialgebra& q);

/// For a half-real form of real type: the triple has real bracket constants,
/// imaginary cobracket constants, and a real-type quasitriangular structure.
VerificationReport half_real_triple_check(const QuasitriangularBialgebra& q);

} // namespace lietriple
