#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "torsionpoly/bigfloat.hpp"
#include "torsionpoly/intpoly.hpp"

using namespace torsionpoly;

namespace {

IntPoly poly(std::vector<long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return IntPoly{std::move(v)};
}

IntPoly random_poly(std::mt19937& rng, int max_deg, long coeff_bound) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
    const int deg = deg_dist(rng);
    std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
    for (auto& ci : c) ci = coeff_dist(rng);
    return IntPoly{std::move(c)};
}

}  // namespace

TEST_CASE("chebyshev_T base cases and T_5") {
    CHECK(chebyshev_T(0) == poly({1}));
    CHECK(chebyshev_T(1) == poly({0, 1}));
    CHECK(chebyshev_T(5) == poly({0, 5, 0, -20, 0, 16}));
}

TEST_CASE("chebyshev_T leading coefficient is 2^(l-1)") {
    Int expected = 1;
    for (int l = 1; l <= 30; ++l) {
        CHECK(chebyshev_T(l).leading() == expected);
        expected *= 2;
    }
}

TEST_CASE("T_l(cos theta) == cos(l theta) numerically") {
    // 128-bit evaluation: double Horner on T_50 alone loses ~8 digits.
    constexpr mpfr_prec_t prec = 128;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> theta_dist(1e-3, std::acos(-1.0) - 1e-3);
    for (int l = 1; l <= 50; ++l) {
        const IntPoly T = chebyshev_T(l);
        for (int trial = 0; trial < 100; ++trial) {
            const BigFloat theta{theta_dist(rng), prec};
            const BigFloat x = cos(theta);
            BigFloat acc{0.0, prec};
            for (int i = T.degree(); i >= 0; --i) acc = acc * x + BigFloat{Int{T.coeff(i)}, prec};
            const BigFloat expected = cos(BigFloat{static_cast<double>(l), prec} * theta);
            CHECK(abs(acc - expected).to_double() < 1e-9);
        }
    }
}

TEST_CASE("T_l has the parity of l") {
    for (int l = 0; l <= 40; ++l) {
        const IntPoly T = chebyshev_T(l);
        for (int i = 0; i <= T.degree(); ++i)
            if (i % 2 != l % 2) CHECK(T.coeff(i) == 0);
    }
}

TEST_CASE("exact_div worked examples") {
    // (T_6 - T_4)/2 divided by x^2 - 1.
    CHECK(exact_div(poly({-1, 0, 13, 0, -28, 0, 16}), poly({-1, 0, 1})) == poly({1, 0, -12, 0, 16}));
    CHECK(exact_div(poly({-1, 0, 1}), poly({-1, 1})) == poly({1, 1}));
    CHECK_THROWS_AS(exact_div(poly({-1, 0, 1}), poly({0, 1})), NonZeroRemainder);
    CHECK_THROWS_AS(exact_div(poly({0, 1}), poly({2})), NonIntegerQuotient);
    CHECK_THROWS_AS(exact_div(poly({1}), IntPoly{}), std::invalid_argument);
}

TEST_CASE("(T_{N+1} - T_{N-1}) / (2(x^2-1)) == U_{N-1}") {
    for (int N = 2; N <= 60; ++N) {
        const IntPoly diff = chebyshev_T(N + 1) - chebyshev_T(N - 1);
        CHECK(exact_div(diff, poly({-2, 0, 2})) == chebyshev_U(N - 1));
    }
}

TEST_CASE("exact_div(a*b, b) == a on random polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_poly(rng, 12, 1000);
        IntPoly b = random_poly(rng, 12, 1000);
        if (b.is_zero()) b = poly({1});
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("even_part") {
    CHECK(even_part(poly({1, 0, -12, 0, 16})) == poly({1, -12, 16}));
    CHECK(even_part(poly({1})) == poly({1}));
    CHECK(even_part(IntPoly{}) == IntPoly{});
    CHECK_THROWS_AS(even_part(poly({0, 0, 0, 1})), OddCoefficientPresent);
}

TEST_CASE("chebyshev product identity") {
    CHECK(chebyshev_product_identity_check(1, 1));
    CHECK(chebyshev_product_identity_check(5, 3));
    CHECK(chebyshev_product_identity_check(7, 0));
    for (int m = 0; m <= 20; ++m)
        for (int n = 0; n <= m; ++n) CHECK(chebyshev_product_identity_check(m, n));
}

TEST_CASE("zero polynomial conventions") {
    const IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == IntPoly::kDegNegInf);
    CHECK(IntPoly::constant(0).is_zero());
    CHECK((z * poly({1, 2, 3})).is_zero());
    CHECK(z.to_string() == "0");
}

TEST_CASE("degree of product is sum of degrees") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly a = random_poly(rng, 10, 50);
        IntPoly b = random_poly(rng, 10, 50);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("parallel product matches the serial reference") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const IntPoly a = random_poly(rng, 200, 1000000);
        const IntPoly b = random_poly(rng, 200, 1000000);
        CHECK(detail::mul_parallel(a.coeffs(), b.coeffs()) == detail::mul_serial(a.coeffs(), b.coeffs()));
    }
}

TEST_CASE("RatPoly stays reduced and converts back") {
    RatPoly r{{Rat{2, 4}, Rat{-6, 3}}};
    CHECK(r.coeffs()[0] == Rat{1, 2});
    CHECK(r.coeffs()[1] == -2);
    CHECK_THROWS_AS(r.to_int_poly(), NonIntegerQuotient);
    CHECK(RatPoly{{Rat{4, 2}}}.to_int_poly() == poly({2}));
}

TEST_CASE("to_string renders descending powers with explicit signs") {
    CHECK(poly({1, -6, 4}).to_string("t") == "4t^2 - 6t + 1");
    CHECK(poly({-1}).to_string() == "-1");
    CHECK(poly({0, 1}).to_string() == "x");
}
