#include "bunq/weyl.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

#include "bunq/errors.hpp"

namespace bunq {

namespace {

// implementation bound: keeps degree arithmetic well inside int range
constexpr int kMaxRank = 100000;

const char* family_letter(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    }
    throw InternalError("unknown family");
}

} // namespace

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank)
{
    if (rank < 1)
        throw DomainError(fmt::format("{}{}: rank must be positive", family_letter(family), rank));
    if (rank > kMaxRank)
        throw DomainError(fmt::format("{}{}: rank exceeds the supported bound {}",
                                      family_letter(family), rank, kMaxRank));
    switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
        break;
    case Family::D:
        if (rank < 3)
            throw DomainError(fmt::format("D{}: family D requires rank >= 3", rank));
        break;
    case Family::E:
        if (rank < 6 || rank > 8)
            throw DomainError(fmt::format("E{}: family E requires rank 6, 7 or 8", rank));
        break;
    case Family::F:
        if (rank != 4)
            throw DomainError(fmt::format("F{}: family F requires rank 4", rank));
        break;
    case Family::G:
        if (rank != 2)
            throw DomainError(fmt::format("G{}: family G requires rank 2", rank));
        break;
    }
}

std::string SimpleType::name() const
{
    return fmt::format("{}{}", family_letter(family_), rank_);
}

std::vector<int> invariant_degrees(const SimpleType& s)
{
    const int n = s.rank();
    std::vector<int> d;
    d.reserve(static_cast<size_t>(n));
    switch (s.family()) {
    case Family::A:
        for (int i = 2; i <= n + 1; ++i)
            d.push_back(i);
        break;
    case Family::B:
    case Family::C:
        for (int i = 1; i <= n; ++i)
            d.push_back(2 * i);
        break;
    case Family::D:
        for (int i = 1; i <= n - 1; ++i)
            d.push_back(2 * i);
        d.push_back(n);
        break;
    case Family::E:
        if (n == 6)
            d = {2, 5, 6, 8, 9, 12};
        else if (n == 7)
            d = {2, 6, 8, 10, 12, 14, 18};
        else
            d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    case Family::F:
        d = {2, 6, 8, 12};
        break;
    case Family::G:
        d = {2, 6};
        break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

int GroupSpec::total_rank() const
{
    int r = 0;
    for (const auto& f : factors)
        r += f.rank();
    return r;
}

std::string GroupSpec::name() const
{
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i > 0)
            out += 'x';
        out += factors[i].name();
    }
    return out;
}

GroupSpec make_group(std::vector<SimpleType> factors)
{
    if (factors.empty())
        throw DomainError("a group spec needs at least one simple factor");
    GroupSpec g;
    g.factors = std::move(factors);
    for (const auto& f : g.factors) {
        auto d = invariant_degrees(f);
        g.degrees.insert(g.degrees.end(), d.begin(), d.end());
    }
    for (int n : g.degrees)
        if (n < 2)
            throw InternalError(fmt::format("invariant degree {} < 2", n));
    if (g.degrees.size() != static_cast<size_t>(g.total_rank()))
        throw InternalError("degree count does not match total rank");
    return g;
}

GroupSpec parse_group(std::string_view text)
{
    if (text.empty())
        throw ParseError("empty group spec");
    std::vector<SimpleType> factors;
    size_t pos = 0;
    while (true) {
        const size_t start = pos;
        if (pos >= text.size() || text[pos] < 'A' || text[pos] > 'G')
            throw ParseError(fmt::format("expected a family letter A-G at \"{}\"",
                                         text.substr(start)));
        const Family fam = static_cast<Family>(text[pos]);
        ++pos;
        size_t digits = 0;
        while (pos + digits < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + digits])))
            ++digits;
        if (digits == 0)
            throw ParseError(fmt::format("expected a rank after \"{}\"", text.substr(start, 1)));
        if (digits > 6)
            throw ParseError(fmt::format("rank out of range in \"{}\"", text.substr(start, 1 + digits)));
        int rank = 0;
        for (size_t i = 0; i < digits; ++i)
            rank = rank * 10 + (text[pos + i] - '0');
        pos += digits;
        try {
            factors.emplace_back(fam, rank);
        } catch (const DomainError& e) {
            throw ParseError(fmt::format("invalid factor \"{}\": {}",
                                         text.substr(start, 1 + digits), e.what()));
        }
        if (pos == text.size())
            break;
        if (text[pos] != 'x')
            throw ParseError(fmt::format("expected \"x\" between factors at \"{}\"",
                                         text.substr(pos)));
        ++pos;
        if (pos == text.size())
            throw ParseError("trailing \"x\" in group spec");
    }
    return make_group(std::move(factors));
}

Int weyl_order(const GroupSpec& g)
{
    Int order = 1;
    for (int n : g.degrees)
        order *= n;
    return order;
}

std::vector<std::vector<int>> cartan_matrix(const SimpleType& s)
{
    const int n = s.rank();
    std::vector<std::vector<int>> a(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
    auto bond = [&](int i, int j, int aij = -1, int aji = -1) {
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = aij;
        a[static_cast<size_t>(j)][static_cast<size_t>(i)] = aji;
    };
    switch (s.family()) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i)
            bond(i, i + 1);
        break;
    case Family::B: // last simple root short
        for (int i = 0; i + 2 < n; ++i)
            bond(i, i + 1);
        if (n >= 2)
            bond(n - 2, n - 1, -1, -2);
        break;
    case Family::C: // last simple root long
        for (int i = 0; i + 2 < n; ++i)
            bond(i, i + 1);
        if (n >= 2)
            bond(n - 2, n - 1, -2, -1);
        break;
    case Family::D:
        for (int i = 0; i + 2 < n; ++i)
            bond(i, i + 1);
        bond(n - 3, n - 1);
        break;
    case Family::E: // Bourbaki: node 2 hangs off node 4 of the chain 1-3-4-5-...
        bond(0, 2);
        for (int i = 2; i + 1 < n; ++i)
            bond(i, i + 1);
        bond(1, 3);
        break;
    case Family::F:
        bond(0, 1);
        bond(1, 2, -1, -2);
        bond(2, 3);
        break;
    case Family::G:
        bond(0, 1, -1, -3);
        break;
    }
    return a;
}

namespace {

// v_i -> v_i - sum_j a[i][j] v_j, other coordinates fixed
std::vector<int> reflect(const std::vector<std::vector<int>>& a, int i, std::vector<int> v)
{
    int acc = 0;
    for (size_t j = 0; j < v.size(); ++j)
        acc += a[static_cast<size_t>(i)][j] * v[j];
    v[static_cast<size_t>(i)] -= acc;
    return v;
}

} // namespace

std::uint64_t reflection_group_order(const SimpleType& s, std::uint64_t element_cap)
{
    const int n = s.rank();
    const auto a = cartan_matrix(s);

    using Matrix = std::vector<int>; // row-major n*n
    const auto mul = [n](const Matrix& x, const Matrix& y) {
        Matrix z(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const int xik = x[static_cast<size_t>(i * n + k)];
                if (xik == 0)
                    continue;
                for (int j = 0; j < n; ++j)
                    z[static_cast<size_t>(i * n + j)] += xik * y[static_cast<size_t>(k * n + j)];
            }
        return z;
    };

    std::vector<Matrix> gens;
    for (int i = 0; i < n; ++i) {
        Matrix m(static_cast<size_t>(n) * n, 0);
        for (int k = 0; k < n; ++k)
            m[static_cast<size_t>(k * n + k)] = 1;
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i * n + j)] -= a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        gens.push_back(std::move(m));
    }

    Matrix identity(static_cast<size_t>(n) * n, 0);
    for (int k = 0; k < n; ++k)
        identity[static_cast<size_t>(k * n + k)] = 1;

    std::set<Matrix> seen{identity};
    std::vector<Matrix> frontier{identity};
    while (!frontier.empty()) {
        Matrix m = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : gens) {
            Matrix next = mul(m, g);
            if (seen.insert(next).second) {
                if (seen.size() > element_cap)
                    throw UsageError(fmt::format(
                        "reflection group of {} exceeds the enumeration cap {}", s.name(),
                        element_cap));
                frontier.push_back(std::move(next));
            }
        }
    }
    return seen.size();
}

long long positive_root_count(const SimpleType& s)
{
    const int n = s.rank();
    const auto a = cartan_matrix(s);

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        seen.insert(e);
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<int> v = std::move(frontier.back());
        frontier.pop_back();
        for (int i = 0; i < n; ++i) {
            auto w = reflect(a, i, v);
            if (seen.insert(w).second)
                frontier.push_back(std::move(w));
        }
    }

    long long positive = 0;
    for (const auto& v : seen)
        if (std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; }))
            ++positive;
    return positive;
}

} // namespace bunq
