#include "bunq/oracle.hpp"

#include <fmt/format.h>

#include "bunq/errors.hpp"

namespace bunq {

CountTable count_monomials(const GeneratorSet& g, int cutoff)
{
    if (cutoff < 0)
        throw UsageError(fmt::format("cutoff must be non-negative, got {}", cutoff));

    std::vector<Int> counts(static_cast<size_t>(cutoff) + 1);
    counts[0] = 1;
    for (const auto& gen : g.generators) {
        const int r = gen.degree;
        if (r < 1)
            throw DomainError(fmt::format("generator degree must be >= 1, got {}", r));
        if (gen.multiplicity < 0)
            throw DomainError(
                fmt::format("generator multiplicity must be >= 0, got {}", gen.multiplicity));
        for (long long copy = 0; copy < gen.multiplicity; ++copy) {
            if (gen.parity() == Parity::Even) {
                // one polynomial variable of degree r: unbounded knapsack item
                for (int k = r; k <= cutoff; ++k)
                    counts[static_cast<size_t>(k)] += counts[static_cast<size_t>(k - r)];
            } else {
                // one square-free variable of degree r: 0/1 knapsack item
                for (int k = cutoff; k >= r; --k)
                    counts[static_cast<size_t>(k)] += counts[static_cast<size_t>(k - r)];
            }
        }
    }
    return CountTable{std::move(counts)};
}

} // namespace bunq
