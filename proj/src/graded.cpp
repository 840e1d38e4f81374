#include "bunq/graded.hpp"

#include <fmt/format.h>

#include <utility>

#include "bunq/errors.hpp"

namespace bunq {

GradedDims::GradedDims(std::map<int, long long> dims) : dims_(std::move(dims))
{
    for (auto it = dims_.begin(); it != dims_.end();) {
        if (it->first < 0)
            throw DomainError(fmt::format("graded dimension in negative degree {}", it->first));
        if (it->second < 0)
            throw DomainError(
                fmt::format("negative dimension {} in degree {}", it->second, it->first));
        it = it->second == 0 ? dims_.erase(it) : std::next(it);
    }
}

long long GradedDims::dim(int degree) const
{
    const auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

GradedDims shift(const GradedDims& v, int j)
{
    if (j < 0)
        throw UsageError(fmt::format("shift amount must be non-negative, got {}", j));
    std::map<int, long long> out;
    for (const auto& [degree, dim] : v.dims())
        if (degree - j >= 0)
            out.emplace(degree - j, dim);
    return GradedDims(std::move(out));
}

namespace {

int default_twist(int degree)
{
    // forced value degree/2 for even degrees; ceil(degree/2) for odd ones
    return (degree + 1) / 2;
}

void validate_generator(const Generator& g)
{
    if (g.degree < 1)
        throw DomainError(fmt::format("generator degree must be >= 1, got {}", g.degree));
    if (g.multiplicity < 0)
        throw DomainError(
            fmt::format("generator multiplicity must be >= 0, got {}", g.multiplicity));
    if (g.degree % 2 == 0 && g.twist != g.degree / 2)
        throw DomainError(fmt::format(
            "even generator of degree {} must carry Tate twist {}, got {}", g.degree,
            g.degree / 2, g.twist));
}

} // namespace

Generator make_generator(int degree, long long multiplicity)
{
    return make_generator(degree, multiplicity, default_twist(degree));
}

Generator make_generator(int degree, long long multiplicity, int twist)
{
    Generator g{degree, multiplicity, twist};
    validate_generator(g);
    return g;
}

TruncatedSeries free_gca_hilbert(const GeneratorSet& g, int cutoff)
{
    TruncatedSeries result = TruncatedSeries::one(cutoff);
    for (const auto& gen : g.generators) {
        validate_generator(gen);
        if (gen.multiplicity == 0)
            continue;
        if (gen.parity() == Parity::Even)
            result = result * pow(geometric_factor(gen.degree, cutoff), gen.multiplicity);
        else
            result = result * exterior_factor(gen.degree, gen.multiplicity, cutoff);
    }
    return result;
}

GeneratorSet tensor(const GeneratorSet& a, const GeneratorSet& b)
{
    // multiset union, canonicalized: same (degree, twist) lines merge
    std::map<std::pair<int, int>, long long> merged;
    for (const auto* side : {&a, &b})
        for (const auto& gen : side->generators) {
            validate_generator(gen);
            merged[{gen.degree, gen.twist}] += gen.multiplicity;
        }
    GeneratorSet out;
    out.conjectural = a.conjectural || b.conjectural;
    for (const auto& [key, multiplicity] : merged)
        out.generators.push_back(make_generator(key.first, multiplicity, key.second));
    return out;
}

GeneratorSet generators_from_dims(const GradedDims& v)
{
    GeneratorSet out;
    for (const auto& [degree, dim] : v.dims())
        out.generators.push_back(make_generator(degree, dim));
    return out;
}

} // namespace bunq
