#include "bunq/series.hpp"

#include <fmt/format.h>

#include <utility>

#include "bunq/errors.hpp"

namespace bunq {

namespace {

void check_cutoff(int cutoff)
{
    if (cutoff < 0)
        throw UsageError(fmt::format("series cutoff must be non-negative, got {}", cutoff));
}

} // namespace

TruncatedSeries::TruncatedSeries(int cutoff) : cutoff_(cutoff)
{
    check_cutoff(cutoff);
    coeffs_.resize(static_cast<size_t>(cutoff) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<Int> coeffs, int cutoff)
    : coeffs_(std::move(coeffs)), cutoff_(cutoff)
{
    check_cutoff(cutoff);
    if (coeffs_.size() > static_cast<size_t>(cutoff) + 1)
        throw UsageError(fmt::format("coefficient list of length {} does not fit cutoff {}",
                                     coeffs_.size(), cutoff));
    coeffs_.resize(static_cast<size_t>(cutoff) + 1);
}

TruncatedSeries TruncatedSeries::one(int cutoff)
{
    TruncatedSeries s(cutoff);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(Int coeff, int degree, int cutoff)
{
    if (degree < 0)
        throw UsageError(fmt::format("monomial degree must be non-negative, got {}", degree));
    TruncatedSeries s(cutoff);
    if (degree <= cutoff)
        s.coeffs_[static_cast<size_t>(degree)] = std::move(coeff);
    return s;
}

const Int& TruncatedSeries::coeff(int degree) const
{
    if (degree < 0 || degree > cutoff_)
        throw UsageError(fmt::format("coefficient index {} outside [0, {}]", degree, cutoff_));
    return coeffs_[static_cast<size_t>(degree)];
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.cutoff() != b.cutoff())
        throw UsageError(fmt::format("cutoff mismatch in series product: {} vs {}", a.cutoff(),
                                     b.cutoff()));
    const int n = a.cutoff();
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const Int& ai = a.coeffs()[static_cast<size_t>(i)];
        if (ai == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            const Int& bj = b.coeffs()[static_cast<size_t>(j)];
            if (bj != 0)
                c[static_cast<size_t>(i + j)] += ai * bj;
        }
    }
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries pow(const TruncatedSeries& a, long long exponent)
{
    if (exponent < 0)
        throw UsageError(fmt::format("series exponent must be non-negative, got {}", exponent));
    TruncatedSeries result = TruncatedSeries::one(a.cutoff());
    TruncatedSeries base = a;
    while (exponent > 0) {
        if (exponent & 1)
            result = result * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

TruncatedSeries geometric_factor(int r, int cutoff)
{
    if (r <= 0)
        throw DomainError(fmt::format("geometric factor needs a positive degree, got {}", r));
    if (r % 2 != 0)
        throw DomainError(fmt::format(
            "geometric factor needs an even degree, got {} (odd generators are exterior)", r));
    TruncatedSeries s(cutoff);
    std::vector<Int> c(static_cast<size_t>(cutoff) + 1);
    for (int k = 0; k <= cutoff; k += r)
        c[static_cast<size_t>(k)] = 1;
    return TruncatedSeries(std::move(c), cutoff);
}

TruncatedSeries exterior_factor(int r, long long multiplicity, int cutoff)
{
    if (r <= 0)
        throw DomainError(fmt::format("exterior factor needs a positive degree, got {}", r));
    if (r % 2 == 0)
        throw DomainError(fmt::format(
            "exterior factor needs an odd degree, got {} (even generators are polynomial)", r));
    if (multiplicity < 0)
        throw DomainError(
            fmt::format("exterior factor multiplicity must be non-negative, got {}", multiplicity));
    std::vector<Int> c(static_cast<size_t>(cutoff) + 1);
    Int binom = 1; // C(multiplicity, k), exact at every step
    for (long long k = 0; k <= multiplicity; ++k) {
        if (k > 0) {
            binom *= multiplicity - k + 1;
            binom /= k;
        }
        const long long deg = k * r;
        if (deg > cutoff)
            break;
        c[static_cast<size_t>(deg)] = binom;
    }
    return TruncatedSeries(std::move(c), cutoff);
}

} // namespace bunq
