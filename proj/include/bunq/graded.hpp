#pragma once

#include <map>
#include <vector>

#include "bunq/series.hpp"

namespace bunq {

/// Finitely supported dimension vector of a graded rational vector space.
/// Zero entries are not stored; all stored dimensions are positive.
class GradedDims {
  public:
    GradedDims() = default;
    explicit GradedDims(std::map<int, long long> dims);

    long long dim(int degree) const;
    const std::map<int, long long>& dims() const { return dims_; }
    bool empty() const { return dims_.empty(); }

    friend bool operator==(const GradedDims&, const GradedDims&) = default;

  private:
    std::map<int, long long> dims_;
};

/// The shift V[j]: result_k = v_{k+j}. Classes move down by j; degrees that
/// would become negative are discarded.
GradedDims shift(const GradedDims& v, int j);

enum class Parity { Even, Odd };

/// A free graded-commutative generator. Parity is determined by the degree:
/// even-degree generators are polynomial, odd-degree generators exterior.
/// The twist is the Tate weight; for even generators it must equal degree/2.
struct Generator {
    int degree = 1;
    long long multiplicity = 0;
    int twist = 1;

    Parity parity() const { return degree % 2 == 0 ? Parity::Even : Parity::Odd; }

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generator with the default twist ceil(degree/2); for even degrees this is
/// the forced Hodge-Tate value degree/2.
Generator make_generator(int degree, long long multiplicity);

/// Generator with an explicit twist; even degrees must carry twist == degree/2.
Generator make_generator(int degree, long long multiplicity, int twist);

/// Free graded-commutative generator list presenting a component cohomology.
/// `conjectural` is set when odd generators were admitted by the conjectural
/// mode rather than licensed by an even-cell structure.
struct GeneratorSet {
    std::vector<Generator> generators;
    bool conjectural = false;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// Hilbert series of the free graded-commutative algebra on `g`: product of
/// geometric factors over even generators and exterior factors over odd ones.
/// Throws DomainError on generators of degree < 1.
TruncatedSeries free_gca_hilbert(const GeneratorSet& g, int cutoff);

/// Tensor product of free graded-commutative algebras: the multiset union of
/// the generator lists, canonicalized by (degree, twist) with multiplicities
/// added. The conjectural flags combine disjunctively.
GeneratorSet tensor(const GeneratorSet& a, const GeneratorSet& b);

/// One generator per graded dimension of `v`, with default twists.
GeneratorSet generators_from_dims(const GradedDims& v);

} // namespace bunq
