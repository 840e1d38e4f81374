#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bunq {

/// Rational Betti numbers b_0 .. b_D of a connected finite CW-complex, with
/// construction provenance. `even_cells_only` is a guarantee flag: it is set
/// only by constructors known to produce a CW structure without odd cells,
/// never inferred from vanishing odd Betti numbers.
struct SpaceModel {
    std::vector<long long> betti;
    std::string label;
    bool even_cells_only = false;

    int dim() const { return static_cast<int>(betti.size()) - 1; }

    /// b_q, with 0 outside [0, dim].
    long long betti_at(int q) const;
};

SpaceModel make_point();

/// S^m, m >= 1. Even-cell structure exists exactly for even m.
SpaceModel make_sphere(int m);

/// Smooth complex projective curve of the given genus: Betti vector [1, 2g, 1].
SpaceModel make_curve(long long genus);

/// Complex projective space P^k, k >= 0.
SpaceModel make_projective(int k);

/// Smooth hypersurface in P^{k+1} of complex dimension k >= 1 with middle
/// Betti number d. Below the middle the Betti numbers are those of P^{k+1}
/// (weak Lefschetz); above, Poincare duality. Even k requires d >= 1.
SpaceModel make_hypersurface(int k, long long d);

/// Arbitrary Betti vector with b_0 == 1. Carries no cell-structure guarantee.
SpaceModel make_custom(std::vector<long long> betti);

/// Kunneth product: coefficientwise convolution of the Betti vectors.
SpaceModel product(const SpaceModel& a, const SpaceModel& b);

/// Parses `point | sphere:m | curve:g | proj:k | hyp:k,d | betti:b0,b1,... |
/// prod(S;S)`. Throws ParseError naming the offending token.
SpaceModel parse_space(std::string_view text);

} // namespace bunq
