#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "torsionpoly/oracle.hpp"
#include "torsionpoly/verify.hpp"

using namespace torsionpoly;

TEST_CASE("collect_roots") {
    const auto ms = collect_roots(make_descriptor(2, 3, -1));
    REQUIRE(ms.roots.size() == 2);
    CHECK(ms.roots[0].to_double() == doctest::Approx(0.19098300562505255).epsilon(1e-9));
    CHECK(ms.roots[1].to_double() == doctest::Approx(1.3090169943749475).epsilon(1e-9));

    CHECK(collect_roots(make_descriptor(4, 3, -1)).roots.size() == 10);
    CHECK(collect_roots(make_descriptor(4, 3, 0)).roots.empty());
}

TEST_CASE("roots are strictly positive and as many as the degree") {
    for (auto [p, q, n] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {4, 3, -1}, {3, 5, 2}, {5, 4, -2}}) {
        const auto d = make_descriptor(p, q, n);
        const auto ms = collect_roots(d);
        CHECK(static_cast<int>(ms.roots.size()) == degree_formula(d));
        for (const auto& r : ms.roots) CHECK(r.sign() > 0);
    }
}

TEST_CASE("reconstruct") {
    RootMultiset single;
    single.precision = 128;
    single.roots.push_back(BigFloat{0.5, 128});
    const auto c = reconstruct(single, 2);
    REQUIRE(c.size() == 2);
    CHECK(c[0].to_double() == -1.0);
    CHECK(c[1].to_double() == 2.0);

    RootMultiset empty;
    const auto c1 = reconstruct(empty, 1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].to_double() == 1.0);

    const auto ms = collect_roots(make_descriptor(2, 3, -1));
    const auto c23 = reconstruct(ms, 4);
    REQUIRE(c23.size() == 3);
    CHECK(c23[0].to_double() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c23[1].to_double() == doctest::Approx(-6.0).epsilon(1e-12));
    CHECK(c23[2].to_double() == doctest::Approx(4.0).epsilon(1e-12));

    CHECK_THROWS_AS(reconstruct(ms, 0), std::invalid_argument);
}

TEST_CASE("compare") {
    const IntPoly exact{{Int{1}, Int{-6}, Int{4}}};
    std::vector<BigFloat> same{BigFloat{1.0, 128}, BigFloat{-6.0, 128}, BigFloat{4.0, 128}};
    const auto rep = compare(exact, same, 1e-9);
    CHECK(rep.pass);
    CHECK(rep.max_rel_error == 0.0);

    const auto d = make_descriptor(2, 3, -1);
    const auto tp = sigma(d);
    auto ms = collect_roots(d);
    CHECK(compare(tp.sigma, reconstruct(ms, tp.sigma.leading()), 1e-9).pass);

    // Sensitivity: one root off by 1e-3 must be caught.
    ms.roots[0] = ms.roots[0] + BigFloat{1e-3, ms.precision};
    CHECK_FALSE(compare(tp.sigma, reconstruct(ms, tp.sigma.leading()), 1e-9).pass);

    CHECK_THROWS_AS(compare(exact, std::vector<BigFloat>{BigFloat{1.0, 128}}, 1e-9), LengthMismatch);
    CHECK_THROWS_AS(compare(exact, same, 0.0), std::invalid_argument);
}

TEST_CASE("reconstruction is permutation-invariant") {
    auto ms = collect_roots(make_descriptor(4, 3, 1));
    const auto tp = sigma(ms.descriptor);
    const auto base = reconstruct(ms, tp.sigma.leading());

    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(ms.roots.begin(), ms.roots.end(), rng);
        const auto shuffled = reconstruct(ms, tp.sigma.leading());
        REQUIRE(shuffled.size() == base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            const BigFloat scale = abs(base[i]).to_double() > 1.0 ? abs(base[i]) : BigFloat{1.0, ms.precision};
            CHECK(abs((shuffled[i] - base[i]) / scale).to_double() < 1e-12);
        }
    }
}

TEST_CASE("grid: exact sigma vs reconstruction at 128 bits") {
    GridSpec grid{5, 5, 2};
    for_each_grid_cell(grid, [](const SurgeryDescriptor& d) {
        const auto tp = sigma(d);
        const auto cmp = compare(tp.sigma, reconstruct(collect_roots(d, 128), tp.sigma.leading()), 1e-9);
        CHECK(cmp.pass);
    });
}
