#pragma once

#include <vector>

#include "bunq/graded.hpp"
#include "bunq/series.hpp"
#include "bunq/space.hpp"
#include "bunq/weyl.hpp"

namespace bunq {

/// One Eilenberg-MacLane factor K(Z^rank, degree) of Map(X, BG), remembering
/// which source cohomological degree q and invariant degree n_i produced it
/// (degree == 2*n_i - q).
struct EMFactor {
    long long rank = 1;
    int degree = 0;
    int q = 0;
    int invariant_degree = 2;

    friend bool operator==(const EMFactor&, const EMFactor&) = default;
};

/// The rational product decomposition of Map(X, BG). Factors of degree 0 are
/// discrete; they multiply the component set and are kept apart from the
/// series-contributing positive factors.
struct EMFactorization {
    std::vector<EMFactor> positive_factors;
    std::vector<EMFactor> degree_zero_factors;
};

/// Product of K(H^q(X); 2n_i - q) over all invariant degrees n_i and all
/// 0 <= q <= dim X with b_q > 0; factors of negative degree are omitted.
/// Deterministic ordering by (q, n_i).
EMFactorization thom_factorization(const SpaceModel& x, const GroupSpec& g);

/// Poincare series of Map(X, BG) up to the cutoff: geometric factors for the
/// even-degree EM factors, exterior factors for the odd-degree ones.
TruncatedSeries poincare_series(const SpaceModel& x, const GroupSpec& g, int cutoff);

/// Closed form of the Poincare series for a smooth hypersurface of complex
/// dimension k in P^{k+1} with middle Betti number d:
///   k = 2m:    prod_i (1-t^{2n_i-k})^{-d} * prod_{0<=q<=k, q != m} (1-t^{2n_i-2q})^{-1}
///   k = 2m+1:  prod_i (1+t^{2n_i-k})^{d}  * prod_{0<=q<=k}         (1-t^{2n_i-2q})^{-1}
/// with factors of non-positive exponent in t dropped. Agrees coefficientwise
/// with poincare_series(make_hypersurface(k, d), g, cutoff).
TruncatedSeries lemma_hypersurface_series(int k, long long d, const GroupSpec& g, int cutoff);

/// Rank of pi_k(Map(X, BG)) tensor Q for k >= 1: the sum over invariant
/// degrees n_i of b_{2n_i - k}(X).
long long homotopy_rank(const SpaceModel& x, const GroupSpec& g, int k);

/// Free graded-commutative presentation of the cohomology of one connected
/// component of Map(X, BG): even generators of degree 2n_i - 2j with
/// multiplicity b_{2j} and twist n_i - j, for every even source degree 2j
/// (including j = 0, the BG stratum). In conjectural mode odd source degrees
/// contribute odd generators as well and the result is flagged. Without the
/// conjectural flag the space must guarantee an even-cell structure; throws
/// HypothesisError otherwise.
GeneratorSet component_cohomology(const SpaceModel& x, const GroupSpec& g, bool conjectural);

/// One row per cohomological degree with nonzero dimension. The weight of
/// every row equals degree/2; rows of odd degree (half-integral weight) can
/// occur only in conjectural tables.
struct HodgeTateRow {
    int degree = 0;
    Int dimension;

    friend bool operator==(const HodgeTateRow&, const HodgeTateRow&) = default;
};

struct HodgeTateTable {
    std::vector<HodgeTateRow> rows;
    bool conjectural = false;
};

/// Dimension table of the free graded-commutative algebra on `gs` up to the
/// cutoff, with the Tate weight of each degree. Throws InternalError if an
/// odd-degree row appears without the conjectural flag.
HodgeTateTable hodge_tate_table(const GeneratorSet& gs, int cutoff);

} // namespace bunq
