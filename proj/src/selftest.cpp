#include "bunq/selftest.hpp"

#include <fmt/format.h>

#include <map>
#include <random>
#include <vector>

#include "bunq/errors.hpp"
#include "bunq/graded.hpp"
#include "bunq/mapping.hpp"
#include "bunq/oracle.hpp"
#include "bunq/series.hpp"
#include "bunq/space.hpp"
#include "bunq/weyl.hpp"

namespace bunq {

namespace {

// mt19937_64 with modulo reduction: identical sequences on every platform
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    long long bounded(long long lo, long long hi)
    {
        return lo + static_cast<long long>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

struct Suite {
    explicit Suite(std::string suite_name) : name(std::move(suite_name)) {}

    std::string name;
    long long cases = 0;
    std::string first_failure;

    void check(bool cond, const std::string& what)
    {
        ++cases;
        if (!cond && first_failure.empty())
            first_failure = what;
    }

    SuiteResult result() const
    {
        const bool ok = first_failure.empty();
        return {name, ok, ok ? fmt::format("{} checks", cases) : first_failure};
    }
};

TruncatedSeries random_series(Rng& rng, int cutoff)
{
    std::vector<Int> c(static_cast<size_t>(cutoff) + 1);
    for (auto& x : c)
        x = rng.bounded(-5, 5);
    return TruncatedSeries(std::move(c), cutoff);
}

GeneratorSet random_generator_set(Rng& rng)
{
    GeneratorSet g;
    const long long count = rng.bounded(0, 8);
    for (long long i = 0; i < count; ++i)
        g.generators.push_back(
            make_generator(static_cast<int>(rng.bounded(1, 12)), rng.bounded(0, 4)));
    return g;
}

bool series_equals_counts(const TruncatedSeries& s, const CountTable& t)
{
    return s.coeffs() == t.counts;
}

SuiteResult suite_powerseries()
{
    Suite suite("powerseries ring laws and closed forms");
    Rng rng(0x5e21e5u);

    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.bounded(0, 16));
        const auto a = random_series(rng, n);
        const auto b = random_series(rng, n);
        const auto c = random_series(rng, n);
        suite.check(a * b == b * a, fmt::format("product not commutative at cutoff {}", n));
        suite.check((a * b) * c == a * (b * c),
                    fmt::format("product not associative at cutoff {}", n));
    }

    for (int r = 2; r <= 8; r += 2)
        for (int n = 0; n <= 20; ++n) {
            const TruncatedSeries unit = TruncatedSeries::one(n);
            // 1 - t^r
            std::vector<Int> c(static_cast<size_t>(n) + 1);
            c[0] = 1;
            if (r <= n)
                c[static_cast<size_t>(r)] = -1;
            const TruncatedSeries one_minus(std::move(c), n);
            suite.check(geometric_factor(r, n) * one_minus == unit,
                        fmt::format("geometric_factor({}, {}) is not inverse to 1-t^r", r, n));
        }

    for (int trial = 0; trial < 40; ++trial) {
        const int r = 2 * static_cast<int>(rng.bounded(0, 5)) + 1;
        const long long d = rng.bounded(0, 5);
        const int n = static_cast<int>(rng.bounded(0, 24));
        TruncatedSeries repeated = TruncatedSeries::one(n);
        for (long long i = 0; i < d; ++i)
            repeated = repeated * exterior_factor(r, 1, n);
        suite.check(exterior_factor(r, d, n) == repeated,
                    fmt::format("exterior_factor({}, {}, {}) != {}-fold product", r, d, n, d));
    }

    return suite.result();
}

SuiteResult suite_weyl()
{
    Suite suite("weyl degree tables vs brute-force enumeration");

    const std::vector<SimpleType> small = {
        {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 1}, {Family::B, 2},
        {Family::B, 3}, {Family::C, 1}, {Family::C, 2}, {Family::C, 3}, {Family::G, 2},
        {Family::D, 3},
    };
    for (const auto& s : small) {
        Int prod = 1;
        for (int n : invariant_degrees(s))
            prod *= n;
        suite.check(Int(reflection_group_order(s)) == prod,
                    fmt::format("{}: reflection group order != product of degrees", s.name()));
    }

    std::vector<SimpleType> all = small;
    for (int n = 4; n <= 6; ++n)
        all.emplace_back(Family::A, n);
    for (int n = 4; n <= 6; ++n)
        all.emplace_back(Family::B, n);
    all.emplace_back(Family::C, 2);
    for (int n = 4; n <= 6; ++n)
        all.emplace_back(Family::C, n);
    for (int n = 4; n <= 6; ++n)
        all.emplace_back(Family::D, n);
    all.emplace_back(Family::E, 6);
    all.emplace_back(Family::E, 7);
    all.emplace_back(Family::E, 8);
    all.emplace_back(Family::F, 4);
    for (const auto& s : all) {
        long long want = 0;
        for (int n : invariant_degrees(s))
            want += n - 1;
        suite.check(positive_root_count(s) == want,
                    fmt::format("{}: positive root count != sum of (n_i - 1)", s.name()));
    }

    Rng rng(0xdeed5u);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<SimpleType> factors;
        const long long count = rng.bounded(1, 3);
        for (long long i = 0; i < count; ++i)
            factors.push_back(all[static_cast<size_t>(rng.bounded(0, static_cast<long long>(all.size()) - 1))]);
        const GroupSpec g = make_group(factors);
        const GroupSpec reparsed = parse_group(g.name());
        suite.check(reparsed.name() == g.name() && reparsed.degrees == g.degrees,
                    fmt::format("parse/render not the identity on {}", g.name()));
    }

    return suite.result();
}

SuiteResult suite_graded_oracle()
{
    Suite suite("free algebra Hilbert series vs monomial-count oracle");
    Rng rng(0x9a1ce5u);

    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_generator_set(rng);
        const int n = static_cast<int>(rng.bounded(0, 24));
        suite.check(series_equals_counts(free_gca_hilbert(g, n), count_monomials(g, n)),
                    fmt::format("oracle mismatch on random generator set, trial {}", trial));
    }

    for (int trial = 0; trial < 60; ++trial) {
        std::map<int, long long> dims;
        const long long entries = rng.bounded(0, 5);
        for (long long i = 0; i < entries; ++i)
            dims[static_cast<int>(rng.bounded(0, 14))] = rng.bounded(0, 4);
        const GradedDims v{dims};
        const int i = static_cast<int>(rng.bounded(0, 6));
        const int j = static_cast<int>(rng.bounded(0, 6));
        suite.check(shift(shift(v, i), j) == shift(v, i + j), "shift composition failed");
    }

    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_generator_set(rng);
        const auto b = random_generator_set(rng);
        const int n = static_cast<int>(rng.bounded(0, 20));
        suite.check(free_gca_hilbert(tensor(a, b), n) ==
                        free_gca_hilbert(a, n) * free_gca_hilbert(b, n),
                    "tensor Hilbert series is not multiplicative");
        suite.check(free_gca_hilbert(a, n).coeff(0) == 1, "constant coefficient != 1");
    }

    // adding a generator never shrinks any count
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_generator_set(rng);
        const int n = static_cast<int>(rng.bounded(0, 24));
        const auto before = count_monomials(g, n);
        g.generators.push_back(
            make_generator(static_cast<int>(rng.bounded(1, 12)), rng.bounded(1, 4)));
        const auto after = count_monomials(g, n);
        bool monotone = true;
        for (int k = 0; k <= n; ++k)
            monotone = monotone && after.counts[static_cast<size_t>(k)] >=
                                       before.counts[static_cast<size_t>(k)];
        suite.check(monotone, "count table shrank after adding a generator");
    }

    return suite.result();
}

SuiteResult suite_space()
{
    Suite suite("space constructors and Kunneth products");

    const auto p1 = make_projective(1);
    const auto s2 = make_sphere(2);
    const auto c1 = make_curve(1);
    suite.check(product(p1, s2).betti == product(s2, p1).betti, "product not commutative");
    suite.check(product(product(p1, s2), c1).betti == product(p1, product(s2, c1)).betti,
                "product not associative");
    suite.check(product(make_point(), c1).betti == c1.betti, "point is not the unit");
    suite.check(product(make_sphere(1), make_sphere(1)).betti == make_curve(1).betti,
                "torus Kunneth check failed");
    suite.check(product(p1, p1).betti == std::vector<long long>({1, 0, 2, 0, 1}),
                "P1 x P1 Betti vector wrong");

    for (int k = 1; k <= 4; ++k)
        for (long long d = (k % 2 == 0 ? 1 : 0); d <= 10; ++d) {
            const auto x = make_hypersurface(k, d);
            bool palindrome = true;
            for (int j = 0; j <= 2 * k; ++j)
                palindrome = palindrome && x.betti_at(j) == x.betti_at(2 * k - j);
            suite.check(palindrome, fmt::format("hyp:{},{} Betti vector not palindromic", k, d));
            suite.check(x.betti_at(k) == d, fmt::format("hyp:{},{} middle Betti wrong", k, d));
        }

    for (const auto& x : {make_point(), make_sphere(3), make_curve(2), make_projective(3),
                          make_hypersurface(2, 7), make_custom({1, 0, 2})})
        suite.check(x.betti_at(0) == 1, fmt::format("{}: b_0 != 1", x.label));

    suite.check(!make_custom({1, 0, 2}).even_cells_only,
                "custom Betti input must not claim an even-cell structure");
    suite.check(make_sphere(2).even_cells_only && !make_sphere(3).even_cells_only,
                "sphere even-cell flag wrong");

    return suite.result();
}

std::vector<std::pair<SpaceModel, GroupSpec>> sweep_pairs()
{
    std::vector<SpaceModel> spaces = {
        make_point(),
        make_sphere(1),
        make_sphere(2),
        make_sphere(3),
        make_sphere(4),
        make_curve(0),
        make_curve(1),
        make_curve(2),
        make_curve(3),
        make_projective(1),
        make_projective(2),
        make_projective(3),
        make_projective(4),
        make_hypersurface(1, 4),
        make_hypersurface(2, 1),
        make_hypersurface(2, 7),
        make_hypersurface(3, 0),
        make_hypersurface(3, 4),
        make_hypersurface(4, 2),
        product(make_projective(1), make_projective(1)),
        product(make_curve(1), make_sphere(2)),
        product(make_sphere(3), make_projective(2)),
    };
    Rng rng(0xbe771u);
    for (int i = 0; i < 8; ++i) {
        std::vector<long long> b{1};
        const long long len = rng.bounded(1, 6);
        for (long long q = 0; q < len; ++q)
            b.push_back(rng.bounded(0, 4));
        spaces.push_back(make_custom(std::move(b)));
    }

    const std::vector<GroupSpec> groups = {
        parse_group("A1"), parse_group("A2"),    parse_group("B2"),
        parse_group("G2"), parse_group("A1xA1"), parse_group("A3"),
        parse_group("C3"), parse_group("D4"),    parse_group("A2xG2"),
        parse_group("F4"), parse_group("E6"),    parse_group("E8"),
    };

    std::vector<std::pair<SpaceModel, GroupSpec>> pairs;
    for (size_t i = 0; i < spaces.size(); ++i) {
        pairs.emplace_back(spaces[i], groups[i % groups.size()]);
        pairs.emplace_back(spaces[i], groups[(i + 5) % groups.size()]);
    }
    return pairs;
}

SuiteResult suite_mapping()
{
    Suite suite("mapping space factorization, series and cohomology");
    const int cutoff = 24;

    for (const auto& [x, g] : sweep_pairs()) {
        const auto series = poincare_series(x, g, cutoff);
        suite.check(series.coeff(0) == 1,
                    fmt::format("constant coefficient != 1 for {} / {}", x.label, g.name()));

        const auto presentation = component_cohomology(x, g, true);
        suite.check(free_gca_hilbert(presentation, cutoff) == series,
                    fmt::format("presentation Hilbert series != Poincare series for {} / {}",
                                x.label, g.name()));
        suite.check(series_equals_counts(series, count_monomials(presentation, cutoff)),
                    fmt::format("oracle disagrees with Poincare series for {} / {}", x.label,
                                g.name()));

        const auto factors = thom_factorization(x, g);
        for (int k = 1; k <= cutoff; ++k) {
            long long from_factors = 0;
            for (const auto& f : factors.positive_factors)
                if (f.degree == k)
                    from_factors += f.rank;
            suite.check(homotopy_rank(x, g, k) == from_factors,
                        fmt::format("homotopy rank at k={} disagrees with EM factors for {} / {}",
                                    k, x.label, g.name()));
        }

        bool all_even_betti = true;
        for (int q = 1; q <= x.dim(); q += 2)
            all_even_betti = all_even_betti && x.betti_at(q) == 0;
        if (x.even_cells_only && all_even_betti) {
            bool even_only = true;
            for (const auto& f : factors.positive_factors)
                even_only = even_only && f.degree % 2 == 0;
            for (int k = 1; k <= cutoff; k += 2)
                even_only = even_only && series.coeff(k) == 0;
            suite.check(even_only,
                        fmt::format("odd-degree contribution for even-cell space {} / {}",
                                    x.label, g.name()));

            const auto table = hodge_tate_table(component_cohomology(x, g, false), cutoff);
            bool rows_ok = !table.conjectural;
            for (const auto& row : table.rows)
                rows_ok = rows_ok && row.degree % 2 == 0 &&
                          row.dimension == series.coeff(row.degree);
            suite.check(rows_ok, fmt::format("Hodge-Tate table mismatch for {} / {}", x.label,
                                             g.name()));
        }
    }

    for (const GroupSpec& g : {parse_group("A1"), parse_group("A2"), parse_group("B2"),
                               parse_group("G2")}) {
        for (int k = 1; k <= 4; ++k)
            for (long long d = (k % 2 == 0 ? 1 : 0); d <= 10; ++d)
                suite.check(lemma_hypersurface_series(k, d, g, cutoff) ==
                                poincare_series(make_hypersurface(k, d), g, cutoff),
                            fmt::format("hypersurface closed form != Thom route for k={}, d={}, {}",
                                        k, d, g.name()));

        // BG itself: polynomial algebra on the degrees 2 n_i
        GeneratorSet sym_v;
        for (int n : g.degrees)
            sym_v.generators.push_back(make_generator(2 * n, 1));
        suite.check(poincare_series(make_point(), g, cutoff) == free_gca_hilbert(sym_v, cutoff),
                    fmt::format("Map(point, BG) series != Sym V Hilbert series for {}", g.name()));
    }

    return suite.result();
}

} // namespace

std::vector<SuiteResult> run_selftest()
{
    return {
        suite_powerseries(), suite_weyl(), suite_graded_oracle(), suite_space(), suite_mapping(),
    };
}

} // namespace bunq
