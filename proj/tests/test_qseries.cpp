#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "podpart/qseries.hpp"

#include <random>

using namespace podpart;
using namespace podpart::qseries;

namespace {

PowerSeries from_ints(std::initializer_list<long> c)
{
    std::vector<BigInt> v;
    for (long x : c)
        v.emplace_back(x);
    return PowerSeries(std::move(v));
}

PowerSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit)
{
    std::uniform_int_distribution<long> d(-50, 50);
    std::vector<BigInt> c(order + 1);
    for (auto& x : c)
        x = d(rng);
    if (unit)
        c[0] = (rng() & 1) ? 1 : -1;
    return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("poch_inf expands small products")
{
    // (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + 0 q^3 + ...
    CHECK(poch_inf(1, 1, 3) == from_ints({1, -1, -1, 0}));
    CHECK(poch_inf(5, 4, 3) == PowerSeries::one(3));
    CHECK(poch_inf_neg(1, 1, 0) == PowerSeries::one(0));
    // (1+q)(1+q^3) to order 4
    CHECK(poch_inf_neg(1, 2, 4) == from_ints({1, 1, 0, 1, 1}));
    CHECK_THROWS_AS(poch_inf(0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(poch_inf_neg(1, 0, 5), std::invalid_argument);
}

TEST_CASE("finite Pochhammer symbols")
{
    // (q;q)_2 = (1-q)(1-q^2)
    CHECK(poch_finite(1, 1, 2, 4) == from_ints({1, -1, -1, 1, 0}));
    CHECK(poch_finite(2, 2, 0, 3) == PowerSeries::one(3));
    CHECK(poch_finite_neg(1, 2, 2, 4) == from_ints({1, 1, 0, 1, 1}));
}

TEST_CASE("inverse of (q;q) gives the partition numbers")
{
    const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231};
    auto s = inverse(poch_inf(1, 1, 16));
    for (std::size_t n = 0; n <= 16; ++n)
        CHECK(s[n] == p[n]);
}

TEST_CASE("inverse of 1 - q is the geometric series")
{
    auto g = inverse(from_ints({1, -1, 0, 0, 0, 0}));
    CHECK(g == from_ints({1, 1, 1, 1, 1, 1}));
    CHECK(inverse(g) == from_ints({1, -1, 0, 0, 0, 0}));
    CHECK_THROWS_AS(inverse(from_ints({2, 1})), NotInvertible);
    CHECK_THROWS_AS(inverse(from_ints({0, 1})), NotInvertible);
}

TEST_CASE("mixed truncation orders truncate to the minimum")
{
    auto a = from_ints({1, 1});           // order 1
    auto b = from_ints({1, -1, 0, 0, 0}); // order 4
    auto c = mul(a, b);
    CHECK(c.order() == 1);
    CHECK(c == from_ints({1, 0}));
    CHECK((a + b).order() == 1);
    // (1+q)(1-q) = 1 - q^2
    CHECK(mul(from_ints({1, 1, 0}), from_ints({1, -1, 0})) == from_ints({1, 0, -1}));
}

TEST_CASE("ring laws hold on random series")
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t order = 1 + rng() % 30;
        auto a = random_series(rng, order, false);
        auto b = random_series(rng, order, false);
        auto c = random_series(rng, order, false);
        auto u = random_series(rng, order, true);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
        CHECK(mul(a, PowerSeries::one(order)) == a);
        CHECK(mul(u, inverse(u)) == PowerSeries::one(order));
        CHECK(mul(inverse(u), u) == PowerSeries::one(order));
        CHECK(inverse(inverse(u)) == u);
    }
}

TEST_CASE("binomial helpers agree with general multiplication")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_series(rng, 20, false);
        for (int sign : {1, -1})
            for (std::size_t e : {1u, 3u, 7u, 25u}) {
                auto factor = PowerSeries::one(20) + PowerSeries::monomial(e, sign, 20);
                CHECK(times_binomial(a, sign, e) == mul(a, factor));
                CHECK(over_binomial(a, sign, e) == mul(a, inverse(factor)));
            }
    }
}

TEST_CASE("substitution q -> q^m")
{
    auto s = from_ints({1, 2, 3});
    auto t = substitute_power(s, 3, 8);
    CHECK(t == from_ints({1, 0, 0, 2, 0, 0, 3, 0, 0}));
    CHECK_THROWS_AS(substitute_power(s, 3, 9), std::invalid_argument);
    // theta_square(4) is theta_square(1) with q -> q^4
    CHECK(substitute_power(theta_square(1, 50), 4, 200) == theta_square(4, 200));
}

TEST_CASE("theta series shapes")
{
    auto t = theta_square(4, 20);
    CHECK(t[0] == 1);
    CHECK(t[4] == -2);
    CHECK(t[16] == 2);
    CHECK(t.nonzero_count() == 3);
    CHECK(theta_square(1, 0) == PowerSeries::one(0));

    CHECK(theta_triangular(10) == from_ints({1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(theta_triangular_scaled(12) == from_ints({1, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("Gauss theta identities to order 200")
{
    const std::size_t N = 200;
    CHECK(theta_square(1, N) == divide(poch_inf(1, 1, N), poch_inf_neg(1, 1, N)));
    CHECK(theta_triangular(N) == divide(poch_inf(2, 2, N), poch_inf_neg(1, 2, N)));
}

TEST_CASE("Euler: 1/(q;q^2) = (-q;q)")
{
    CHECK(inverse(poch_inf(1, 2, 200)) == poch_inf_neg(1, 1, 200));
}

TEST_CASE("Jacobi triple product specializations")
{
    CHECK(jacobi_triple_product_check({+1, 2}, 8, 40));
    CHECK(jacobi_triple_product_check({-1, 1}, 4, 40));
    CHECK(jacobi_triple_product_check({+1, 2}, 8, 0));
    // z = q^2, Q = q^8 gives (q^2, q^6, q^8; q^8)
    auto prod = poch_inf(2, 8, 60) * poch_inf(6, 8, 60) * poch_inf(8, 8, 60);
    CHECK(jtp_product_side({+1, 2}, 8, 60) == prod);
    // ... whose sum side is sum (-1)^{n(n+1)/2} q^{n(n+1)}
    CHECK(jtp_sum_side({+1, 2}, 8, 60) == theta_triangular_scaled(60));
    // z = -q, Q = q^4 gives sum_{n>=0} q^{n(n+1)/2}
    auto s = jtp_sum_side({-1, 1}, 4, 60);
    for (std::size_t e = 0; e <= 60; ++e) {
        long m = 0;
        while (m * (m + 1) / 2 < static_cast<long>(e))
            ++m;
        CHECK(s[e] == (m * (m + 1) / 2 == static_cast<long>(e) ? 1 : 0));
    }
    CHECK_THROWS_AS(jacobi_triple_product_check({+1, 0}, 8, 10), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_triple_product_check({+1, 8}, 8, 10), std::invalid_argument);
}

TEST_CASE("JSON serialization is exact")
{
    auto big = inverse(poch_inf(1, 1, 450));
    CHECK(big[450] > BigInt("9223372036854775807"));
    auto j = to_json(big);
    CHECK(j.is_array());
    CHECK(j[450].get<std::string>() == to_decimal(big[450]));
    CHECK(series_from_json(j) == big);
    CHECK_THROWS(series_from_json(nlohmann::json::array()));
}
