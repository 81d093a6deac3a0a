#ifndef RADEXT_DET_HPP
#define RADEXT_DET_HPP

#include "radext/laurent.hpp"

#include <vector>

namespace radext {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Determinant of a square matrix over Q[y, 1/y] by Bareiss fraction-free
/// elimination. Every intermediate division is exact in the Laurent ring.
LaurentPoly determinant(LaurentMatrix m);

} // namespace radext

#endif
