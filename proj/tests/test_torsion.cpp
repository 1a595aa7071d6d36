#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "root_support.hpp"
#include "torsionpoly/oracle.hpp"
#include "torsionpoly/output.hpp"
#include "torsionpoly/torsion.hpp"
#include "torsionpoly/verify.hpp"

using namespace torsionpoly;

namespace {

IntPoly poly(std::vector<long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return IntPoly{std::move(v)};
}

int acyclic_pair_count_formula(const SurgeryDescriptor& d) {
    if (d.p % 2 == 0) return (d.p / 2) * ((d.q - 1) / 2);
    if (d.q % 2 == 0) return ((d.p - 1) / 2) * (d.q / 2);
    return ((d.p - 1) / 2) * ((d.q - 1) / 2);
}

}  // namespace

TEST_CASE("make_descriptor") {
    CHECK(make_descriptor(4, 3, -1).N == 11);
    CHECK(make_descriptor(3, 5, 1).N == 16);
    CHECK(make_descriptor(4, 3, -1).parity_case == ParityCase::PEvenQOdd);
    CHECK(make_descriptor(3, 4, -1).parity_case == ParityCase::POddQEven);
    CHECK(make_descriptor(3, 5, 2).parity_case == ParityCase::BothOddNEven);
    CHECK(make_descriptor(3, 5, 1).parity_case == ParityCase::BothOddNOdd);

    const auto d0 = make_descriptor(5, 6, 0);
    CHECK(d0.N == 1);
    CHECK(d0.parity_case == ParityCase::NZero);

    CHECK_THROWS_AS(make_descriptor(4, 6, 1), NotCoprime);
    CHECK_THROWS_AS(make_descriptor(1, 3, 1), BadParameters);
    CHECK_THROWS_AS(make_descriptor(3, 0, 1), BadParameters);
}

TEST_CASE("enumerate_reps") {
    const auto d = make_descriptor(4, 3, -1);
    const auto reps = enumerate_reps(d);

    std::vector<std::pair<int, int>> acyclic_ab;
    for (const auto& r : reps)
        if (r.acyclic &&
            std::find(acyclic_ab.begin(), acyclic_ab.end(), std::make_pair(r.a, r.b)) == acyclic_ab.end())
            acyclic_ab.emplace_back(r.a, r.b);
    CHECK(acyclic_ab == std::vector<std::pair<int, int>>{{1, 1}, {3, 1}});

    const auto d35 = make_descriptor(3, 5, 1);
    std::vector<std::pair<int, int>> ab35;
    for (const auto& r : enumerate_reps(d35))
        if (r.acyclic && std::find(ab35.begin(), ab35.end(), std::make_pair(r.a, r.b)) == ab35.end())
            ab35.emplace_back(r.a, r.b);
    CHECK(ab35 == std::vector<std::pair<int, int>>{{1, 1}, {1, 3}});

    const auto d23 = make_descriptor(2, 3, -1);
    const auto reps23 = enumerate_reps(d23);
    REQUIRE(reps23.size() == 2);
    CHECK(reps23[0].k == 1);
    CHECK(reps23[1].k == 3);
    CHECK(reps23[0].acyclic);
    CHECK(reps23[1].acyclic);

    CHECK_THROWS_AS(enumerate_reps(make_descriptor(2, 3, 0)), ZeroSurgery);
}

TEST_CASE("enumerate_reps is lexicographic in (a,b,k)") {
    const auto reps = enumerate_reps(make_descriptor(5, 4, 1));
    auto key = [](const RepClass& r) { return std::make_tuple(r.a, r.b, r.k); };
    for (std::size_t i = 1; i < reps.size(); ++i) CHECK(key(reps[i - 1]) < key(reps[i]));
}

TEST_CASE("torsion values for (2,3,-1)") {
    const auto d = make_descriptor(2, 3, -1);
    const auto reps = enumerate_reps(d);
    REQUIRE(reps.size() == 2);
    // 1/tau = (3 -+ sqrt 5)/4.
    CHECK(inverse_torsion(d, reps[0]).to_double() == doctest::Approx(0.19098300562505255).epsilon(1e-9));
    CHECK(inverse_torsion(d, reps[1]).to_double() == doctest::Approx(1.3090169943749475).epsilon(1e-9));
    CHECK(torsion_value(d, reps[0]).to_double() == doctest::Approx(1.0 / 0.19098300562505255).epsilon(1e-9));
}

TEST_CASE("torsion_value rejects non-acyclic classes") {
    const auto d = make_descriptor(4, 3, -1);
    for (const auto& r : enumerate_reps(d))
        if (!r.acyclic) {
            CHECK(r.a % 2 == 0);
            CHECK_THROWS_AS(torsion_value(d, r), NotAcyclic);
            return;
        }
    FAIL("expected a non-acyclic class for (4,3,-1)");
}

TEST_CASE("x_polynomial") {
    // N=5, n<0: -(16x^4 - 12x^2 + 1).
    CHECK(x_polynomial(make_descriptor(2, 3, -1)) == poly({-1, 0, 12, 0, -16}));
    // Positive n keeps the quotient's sign: N=7 gives U_6.
    CHECK(x_polynomial(make_descriptor(2, 3, 1)) == chebyshev_U(6));
    // Both odd, n odd: T_N.
    CHECK(x_polynomial(make_descriptor(3, 5, 1)) == chebyshev_T(16));
    CHECK_THROWS_AS(x_polynomial(make_descriptor(2, 3, 0)), ZeroSurgery);
}

TEST_CASE("y_polynomial for (2,3,-1) is -4t^2 + 6t - 1") {
    auto ctx = std::make_shared<const FieldContext>(2, 3);
    const auto y = y_polynomial(make_descriptor(2, 3, -1), 1, 1, ctx);
    REQUIRE(y.size() == 3);
    CHECK(y[0] == NFElement::from_rational(ctx, -1));
    CHECK(y[1] == NFElement::from_rational(ctx, 6));
    CHECK(y[2] == NFElement::from_rational(ctx, -4));
}

TEST_CASE("y_polynomial degenerate and constant-term cases") {
    auto ctx = std::make_shared<const FieldContext>(4, 3);
    const auto y0 = y_polynomial(make_descriptor(4, 3, 0), 1, 1, ctx);
    REQUIRE(y0.size() == 1);
    CHECK(y0[0] == NFElement::from_rational(ctx, 1));

    const auto y = y_polynomial(make_descriptor(4, 3, -1), 1, 1, ctx);
    CHECK(y[0] == NFElement::from_rational(ctx, 1));
    CHECK(y.size() == 6);  // degree (N-1)/2 = 5
}

TEST_CASE("normalization_value") {
    CHECK(normalization_value(make_descriptor(4, 3, -1)) == 1);
    CHECK(normalization_value(make_descriptor(3, 5, 1)) == 1);
    CHECK(normalization_value(make_descriptor(2, 3, -1)) == 1);
    CHECK(normalization_value(make_descriptor(2, 3, 1)) == -1);  // e = 6*2*2/8 = 3
    CHECK(normalization_value(make_descriptor(2, 3, 0)) == 1);
}

TEST_CASE("degree_formula") {
    CHECK(degree_formula(make_descriptor(4, 3, 1)) == 12);
    CHECK(degree_formula(make_descriptor(3, 5, -1)) == 14);
    CHECK(degree_formula(make_descriptor(5, 6, 0)) == 0);
}

TEST_CASE("sigma worked examples") {
    CHECK(sigma(make_descriptor(4, 3, 0)).sigma == poly({1}));

    const auto s23 = sigma(make_descriptor(2, 3, -1));
    CHECK(s23.sigma == poly({1, -6, 4}));
    CHECK(s23.sign_corrected);

    const auto s43 = sigma(make_descriptor(4, 3, -1));
    CHECK(s43.sigma.degree() == 10);
    CHECK(s43.sigma.coeff(0) == 1);
    CHECK(s43.sigma.leading() == 32768);
    CHECK(s43.factors.size() == 2);
}

TEST_CASE("sigma matches the printed fixture lists under the 4^j scaling") {
    for (const auto& fx : fixtures()) {
        const auto tp = sigma(make_descriptor(fx.p, fx.q, fx.n));
        const IntPoly scaled = scale_by_four(tp.sigma);
        REQUIRE(scaled.degree() + 1 == static_cast<int>(fx.published_coeffs.size()));
        for (std::size_t j = 0; j < fx.published_coeffs.size(); ++j)
            CHECK(scaled.coeff(static_cast<int>(j)) == fx.published_coeffs[j]);
    }
}

TEST_CASE("grid properties: class count, normalization, degree, integrality") {
    GridSpec grid{5, 5, 2};  // the full 7,7,2 grid runs in the acceptance suite
    for_each_grid_cell(grid, [](const SurgeryDescriptor& d) {
        int acyclic_count = 0;
        std::vector<std::pair<int, int>> pairs;
        for (const auto& r : enumerate_reps(d))
            if (r.acyclic) {
                ++acyclic_count;
                if (std::find(pairs.begin(), pairs.end(), std::make_pair(r.a, r.b)) == pairs.end())
                    pairs.emplace_back(r.a, r.b);
            }
        CHECK(acyclic_count == degree_formula(d));
        CHECK(static_cast<int>(pairs.size()) == acyclic_pair_count_formula(d));

        const auto tp = sigma(d);  // throws on any integrality violation
        CHECK(tp.sigma.coeff(0) == normalization_value(d));
        CHECK(tp.sigma.degree() == degree_formula(d));
    });
}

TEST_CASE("root correspondence on a small case") {
    const auto d = make_descriptor(2, 3, -1);
    const auto located = testsupport::sigma_roots(d);
    auto expected = collect_roots(d, 192).roots;
    std::sort(expected.begin(), expected.end());
    REQUIRE(located.size() == expected.size());
    for (std::size_t i = 0; i < located.size(); ++i)
        CHECK(abs((located[i] - expected[i]) / expected[i]).to_double() < 1e-6);
}

TEST_CASE("three_term_D for (2,3) is 8t^3 - 24t^2 + 18t - 2") {
    auto ctx = std::make_shared<const FieldContext>(2, 3);
    const auto D = three_term_D(make_descriptor(2, 3, 1), 1, 1, ctx);
    REQUIRE(D.size() == 4);
    CHECK(D[0] == NFElement::from_rational(ctx, -2));
    CHECK(D[1] == NFElement::from_rational(ctx, 18));
    CHECK(D[2] == NFElement::from_rational(ctx, -24));
    CHECK(D[3] == NFElement::from_rational(ctx, 8));
}

TEST_CASE("three_term_D degrees") {
    auto ctx23 = std::make_shared<const FieldContext>(2, 3);
    CHECK(three_term_D(make_descriptor(2, 3, 1), 1, 1, ctx23).size() == 4);  // deg pq/2 = 3
    auto ctx35 = std::make_shared<const FieldContext>(3, 5);
    CHECK(three_term_D(make_descriptor(3, 5, 1), 1, 1, ctx35).size() == 16);  // deg pq = 15
}

TEST_CASE("verify_three_term") {
    CHECK(verify_three_term(2, 3, 2).all_pass());
    const auto r43 = verify_three_term(4, 3, 2);
    CHECK(r43.step == 1);
    CHECK(r43.all_pass());
    const auto r35 = verify_three_term(3, 5, 3);
    CHECK(r35.step == 2);
    CHECK(r35.all_pass());
}

TEST_CASE("scaling covariance pins the fixture transform") {
    const auto tp = sigma(make_descriptor(4, 3, -1));
    const IntPoly scaled = scale_by_four(tp.sigma);
    Int pow = 1;
    for (int j = 0; j <= tp.sigma.degree(); ++j) {
        CHECK(scaled.coeff(j) == pow * tp.sigma.coeff(j));
        pow *= 4;
    }
}

TEST_CASE("verification suites pass on a reduced grid") {
    CHECK(verify_fixtures().pass);
    CHECK(verify_normalization({5, 5, 1}).pass);
    CHECK(verify_degree({5, 5, 1}).pass);
    CHECK(verify_relation(4, 3, 2).pass);
    CHECK(verify_oracle({4, 5, 1}).pass);
}
