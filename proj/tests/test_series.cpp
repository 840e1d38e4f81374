#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bunq/errors.hpp"
#include "bunq/series.hpp"
#include "test_util.hpp"

using namespace bunq;
using test::make_series;
using test::small_coeffs;

TEST_CASE("product examples")
{
    CHECK(make_series({1}, 4) * make_series({1, 2, 1}, 4) == make_series({1, 2, 1}, 4));
    CHECK(make_series({1, 0, 0, 1}, 6) * make_series({1, 0, 0, 1}, 6) ==
          make_series({1, 0, 0, 2, 0, 0, 1}, 6));
    // telescoping: (1 + t + t^2 + ...) (1 - t) == 1
    CHECK(make_series({1, 1, 1, 1, 1, 1, 1, 1, 1}, 8) * make_series({1, -1}, 8) ==
          TruncatedSeries::one(8));
}

TEST_CASE("product rejects mismatched cutoffs")
{
    CHECK_THROWS_AS(make_series({1}, 4) * make_series({1}, 5), UsageError);
}

TEST_CASE("series construction")
{
    CHECK_THROWS_AS(TruncatedSeries(-1), UsageError);
    CHECK_THROWS_AS(make_series({1, 2, 3}, 1), UsageError); // never truncate silently
    CHECK(make_series({1}, 3) == make_series({1, 0, 0, 0}, 3));
    CHECK(TruncatedSeries::monomial(Int(5), 2, 4) == make_series({0, 0, 5}, 4));
    CHECK(TruncatedSeries::monomial(Int(5), 9, 4) == TruncatedSeries(4)); // above cutoff
    CHECK_THROWS_AS(make_series({1}, 2).coeff(3), UsageError);
}

TEST_CASE("geometric factor")
{
    CHECK(small_coeffs(geometric_factor(2, 7)) ==
          std::vector<long long>{1, 0, 1, 0, 1, 0, 1, 0});
    CHECK(small_coeffs(geometric_factor(4, 6)) == std::vector<long long>{1, 0, 0, 0, 1, 0, 0});
    CHECK(geometric_factor(2, 0) == TruncatedSeries::one(0));
    CHECK_THROWS_AS(geometric_factor(0, 5), DomainError);
    CHECK_THROWS_AS(geometric_factor(-2, 5), DomainError);
    CHECK_THROWS_AS(geometric_factor(3, 5), DomainError);
}

TEST_CASE("exterior factor")
{
    CHECK(small_coeffs(exterior_factor(3, 4, 6)) ==
          std::vector<long long>{1, 0, 0, 4, 0, 0, 6});
    CHECK(exterior_factor(3, 0, 6) == TruncatedSeries::one(6));
    CHECK(small_coeffs(exterior_factor(1, 2, 3)) == std::vector<long long>{1, 2, 1, 0});
    CHECK_THROWS_AS(exterior_factor(2, 1, 5), DomainError);
    CHECK_THROWS_AS(exterior_factor(-1, 1, 5), DomainError);
    CHECK_THROWS_AS(exterior_factor(3, -1, 5), DomainError);
}

TEST_CASE("exterior factor keeps exact big coefficients")
{
    // C(100, 8) = 186087894300
    CHECK(exterior_factor(3, 100, 24).coeff(24) == Int("186087894300"));
}

TEST_CASE("pow by squaring matches repeated product")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng() % 12);
        std::vector<Int> c(static_cast<size_t>(n) + 1);
        for (auto& x : c)
            x = static_cast<long long>(rng() % 7) - 3;
        const TruncatedSeries a(std::move(c), n);
        const long long e = static_cast<long long>(rng() % 6);
        TruncatedSeries repeated = TruncatedSeries::one(n);
        for (long long i = 0; i < e; ++i)
            repeated = repeated * a;
        CHECK(pow(a, e) == repeated);
    }
    CHECK_THROWS_AS(pow(TruncatedSeries::one(3), -1), UsageError);
}

TEST_CASE("product is commutative and associative")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = static_cast<int>(rng() % 16);
        const auto rand_series = [&] {
            std::vector<Int> c(static_cast<size_t>(n) + 1);
            for (auto& x : c)
                x = static_cast<long long>(rng() % 11) - 5;
            return TruncatedSeries(std::move(c), n);
        };
        const auto a = rand_series();
        const auto b = rand_series();
        const auto c = rand_series();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("geometric factor inverts 1 - t^r at every truncation")
{
    for (int r = 2; r <= 10; r += 2)
        for (int n = 0; n <= 25; ++n) {
            std::vector<Int> c(static_cast<size_t>(n) + 1);
            c[0] = 1;
            if (r <= n)
                c[static_cast<size_t>(r)] = -1;
            CHECK(geometric_factor(r, n) * TruncatedSeries(std::move(c), n) ==
                  TruncatedSeries::one(n));
        }
}

TEST_CASE("exterior factor equals the iterated product")
{
    for (int r = 1; r <= 7; r += 2)
        for (long long d = 0; d <= 5; ++d) {
            const int n = 20;
            TruncatedSeries repeated = TruncatedSeries::one(n);
            for (long long i = 0; i < d; ++i)
                repeated = repeated * exterior_factor(r, 1, n);
            CHECK(exterior_factor(r, d, n) == repeated);
        }
}
