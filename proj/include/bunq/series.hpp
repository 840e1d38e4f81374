#pragma once

#include <vector>

#include "bunq/bigint.hpp"

namespace bunq {

/// Formal power series in one variable t, truncated at a fixed cutoff degree
/// (inclusive), with exact integer coefficients. Values are immutable; every
/// operation returns a fresh series. The cutoff travels with the value and is
/// checked on every binary operation.
class TruncatedSeries {
  public:
    /// Zero series truncated at `cutoff`.
    explicit TruncatedSeries(int cutoff);

    /// Series with the given low-order coefficients, zero-padded up to `cutoff`.
    /// Rejects coefficient lists longer than cutoff + 1: truncation is never silent.
    TruncatedSeries(std::vector<Int> coeffs, int cutoff);

    static TruncatedSeries one(int cutoff);

    /// coeff * t^degree.
    static TruncatedSeries monomial(Int coeff, int degree, int cutoff);

    int cutoff() const { return cutoff_; }

    /// Coefficient of t^degree; 0 <= degree <= cutoff.
    const Int& coeff(int degree) const;

    const std::vector<Int>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    std::vector<Int> coeffs_;
    int cutoff_ = 0;
};

/// Cauchy product truncated at the shared cutoff. Throws UsageError if the
/// cutoffs differ.
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// a^exponent by repeated squaring; exponent >= 0.
TruncatedSeries pow(const TruncatedSeries& a, long long exponent);

/// 1 + t^r + t^{2r} + ... up to the cutoff; r must be positive and even
/// (the dimension count of a polynomial algebra on one even generator).
TruncatedSeries geometric_factor(int r, int cutoff);

/// (1 + t^r)^multiplicity up to the cutoff, exact binomial coefficients;
/// r must be positive and odd, multiplicity >= 0.
TruncatedSeries exterior_factor(int r, long long multiplicity, int cutoff);

} // namespace bunq
