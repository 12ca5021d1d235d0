#pragma once

// Weyl dimension formula for type D_n, used as the independent cardinality
// oracle for generated crystals.

#include "dncrystal/lattice.hpp"

namespace dncrystal {

// Product over the positive roots e_a +- e_b (a < b) of
// <lambda+rho, alpha> / <rho, alpha>, computed exactly; throws
// std::logic_error if the product fails to be integral (wrong root data) and
// std::overflow_error if the dimension does not fit 64 bits.
unsigned long long weyl_dim(Rank n, const DominantWeight& lambda);

}  // namespace dncrystal
