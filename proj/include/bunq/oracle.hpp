#pragma once

#include <vector>

#include "bunq/bigint.hpp"
#include "bunq/graded.hpp"

namespace bunq {

/// Monomial counts by degree, 0 .. cutoff.
struct CountTable {
    std::vector<Int> counts;
};

/// Counts monomials of each total degree in the free graded-commutative
/// algebra on `g` by per-generator knapsack convolution: even generators are
/// unbounded items, odd generators square-free 0/1 items (multiplicities
/// expanded to independent variables). Deliberately avoids the closed-form
/// series constructors so it can serve as an independent oracle for them.
CountTable count_monomials(const GeneratorSet& g, int cutoff);

} // namespace bunq
