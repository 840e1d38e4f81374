#include "bunq/mapping.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "bunq/errors.hpp"

namespace bunq {

namespace {

std::vector<int> sorted_degrees(const GroupSpec& g)
{
    std::vector<int> d = g.degrees;
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

EMFactorization thom_factorization(const SpaceModel& x, const GroupSpec& g)
{
    const auto degrees = sorted_degrees(g);
    EMFactorization out;
    for (int q = 0; q <= x.dim(); ++q) {
        const long long b = x.betti_at(q);
        if (b == 0)
            continue;
        for (int n : degrees) {
            const int m = 2 * n - q;
            if (m > 0)
                out.positive_factors.push_back({b, m, q, n});
            else if (m == 0)
                out.degree_zero_factors.push_back({b, 0, q, n});
            // m < 0: K(A; m) is a point, never materialized
        }
    }
    return out;
}

TruncatedSeries poincare_series(const SpaceModel& x, const GroupSpec& g, int cutoff)
{
    TruncatedSeries result = TruncatedSeries::one(cutoff);
    for (const auto& f : thom_factorization(x, g).positive_factors) {
        if (f.degree % 2 == 0)
            result = result * pow(geometric_factor(f.degree, cutoff), f.rank);
        else
            result = result * exterior_factor(f.degree, f.rank, cutoff);
    }
    return result;
}

TruncatedSeries lemma_hypersurface_series(int k, long long d, const GroupSpec& g, int cutoff)
{
    if (k < 1)
        throw DomainError(fmt::format("hypersurface dimension must be >= 1, got {}", k));
    if (d < 0)
        throw DomainError(fmt::format("middle Betti number must be >= 0, got {}", d));
    if (k % 2 == 0 && d < 1)
        throw DomainError(fmt::format(
            "even-dimensional hypersurface needs middle Betti number >= 1, got {}", d));

    const int m = k / 2;
    TruncatedSeries result = TruncatedSeries::one(cutoff);
    for (int n : sorted_degrees(g)) {
        if (k % 2 == 0) {
            if (2 * n - k > 0)
                result = result * pow(geometric_factor(2 * n - k, cutoff), d);
            for (int q = 0; q <= k; ++q) {
                if (q == m)
                    continue;
                if (2 * n - 2 * q > 0)
                    result = result * geometric_factor(2 * n - 2 * q, cutoff);
            }
        } else {
            if (2 * n - k > 0)
                result = result * exterior_factor(2 * n - k, d, cutoff);
            for (int q = 0; q <= k; ++q)
                if (2 * n - 2 * q > 0)
                    result = result * geometric_factor(2 * n - 2 * q, cutoff);
        }
    }
    return result;
}

long long homotopy_rank(const SpaceModel& x, const GroupSpec& g, int k)
{
    if (k < 1)
        throw DomainError(fmt::format("homotopy degree must be >= 1, got {}", k));
    long long rank = 0;
    for (int n : g.degrees)
        rank += x.betti_at(2 * n - k);
    return rank;
}

GeneratorSet component_cohomology(const SpaceModel& x, const GroupSpec& g, bool conjectural)
{
    if (!conjectural && !x.even_cells_only)
        throw HypothesisError(fmt::format(
            "space \"{}\" is not known to admit a CW structure without odd-dimensional cells; "
            "pass --assume-even-cells to assert one, or --conjectural for the conjectural "
            "presentation",
            x.label));

    const auto degrees = sorted_degrees(g);
    GeneratorSet out;
    out.conjectural = conjectural;
    for (int q = 0; q <= x.dim(); ++q) {
        const long long b = x.betti_at(q);
        if (b == 0)
            continue;
        if (q % 2 == 0) {
            const int j = q / 2;
            for (int n : degrees)
                if (2 * n - q > 0)
                    out.generators.push_back(make_generator(2 * n - q, b, n - j));
        } else if (conjectural) {
            for (int n : degrees)
                if (2 * n - q > 0)
                    out.generators.push_back(make_generator(2 * n - q, b, n - (q - 1) / 2));
        }
    }
    return out;
}

HodgeTateTable hodge_tate_table(const GeneratorSet& gs, int cutoff)
{
    const TruncatedSeries dims = free_gca_hilbert(gs, cutoff);
    HodgeTateTable table;
    table.conjectural = gs.conjectural;
    for (int degree = 0; degree <= cutoff; ++degree) {
        const Int& dim = dims.coeff(degree);
        if (dim == 0)
            continue;
        if (degree % 2 != 0 && !gs.conjectural)
            throw InternalError(fmt::format(
                "odd cohomological degree {} in a non-conjectural Hodge-Tate table", degree));
        table.rows.push_back({degree, dim});
    }
    return table;
}

} // namespace bunq
