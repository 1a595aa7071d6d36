#include "torsionpoly/torsion.hpp"

#include <cassert>
#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torsionpoly {

namespace {

int parity(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }

std::vector<NFElement> nf_poly_mul(const std::vector<NFElement>& a, const std::vector<NFElement>& b) {
    assert(!a.empty() && !b.empty());
    const auto ctx = a[0].ctx();
    const std::size_t n = a.size() + b.size() - 1;
    std::vector<NFElement> r(n, NFElement::zero(ctx));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (n >= 32)
#endif
    for (std::size_t k = 0; k < n; ++k) {
        NFElement acc = NFElement::zero(ctx);
        const std::size_t ilo = k >= b.size() ? k - b.size() + 1 : 0;
        const std::size_t ihi = std::min(k, a.size() - 1);
        for (std::size_t i = ilo; i <= ihi; ++i) acc = acc + a[i] * b[k - i];
        r[k] = std::move(acc);
    }
    return r;
}

std::vector<NFElement> nf_poly_sub(const std::vector<NFElement>& a, const std::vector<NFElement>& b) {
    const auto ctx = a.empty() ? b[0].ctx() : a[0].ctx();
    std::vector<NFElement> r(std::max(a.size(), b.size()), NFElement::zero(ctx));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = r[i] + a[i];
        if (i < b.size()) r[i] = r[i] - b[i];
    }
    return r;
}

}  // namespace

std::string to_string(ParityCase c) {
    switch (c) {
        case ParityCase::PEvenQOdd: return "PEvenQOdd";
        case ParityCase::POddQEven: return "POddQEven";
        case ParityCase::BothOddNEven: return "BothOddNEven";
        case ParityCase::BothOddNOdd: return "BothOddNOdd";
        case ParityCase::NZero: return "NZero";
    }
    return "?";
}

SurgeryDescriptor make_descriptor(int p, int q, int n) {
    if (p < 2 || q < 2) throw BadParameters("make_descriptor: p and q must be >= 2");
    if (std::gcd(p, q) != 1) throw NotCoprime("make_descriptor: p and q must be coprime");
    SurgeryDescriptor d;
    d.p = p;
    d.q = q;
    d.n = n;
    d.N = static_cast<int>(std::llabs(static_cast<long long>(p) * q * n + 1));
    if (n == 0)
        d.parity_case = ParityCase::NZero;
    else if (p % 2 == 0)
        d.parity_case = ParityCase::PEvenQOdd;
    else if (q % 2 == 0)
        d.parity_case = ParityCase::POddQEven;
    else if (n % 2 == 0)
        d.parity_case = ParityCase::BothOddNEven;
    else
        d.parity_case = ParityCase::BothOddNOdd;
    return d;
}

std::vector<std::pair<int, int>> acyclic_pairs(int p, int q) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a < p; a += 2)
        for (int b = 1; b < q; b += 2) pairs.emplace_back(a, b);
    return pairs;
}

std::vector<RepClass> enumerate_reps(const SurgeryDescriptor& d) {
    if (d.n == 0) throw ZeroSurgery("enumerate_reps: n = 0 has no irreducible classes");
    const double pi = std::acos(-1.0);
    std::vector<RepClass> reps;
    for (int a = 1; a < d.p; ++a)
        for (int b = 1; b < d.q; ++b) {
            if (parity(a) != parity(b)) continue;
            for (int k = 1; k < d.N; ++k) {
                if (parity(k) != parity(static_cast<long long>(d.n) * a)) continue;
                RepClass r;
                r.a = a;
                r.b = b;
                r.k = k;
                r.trace_x = 2.0 * std::cos(a * pi / d.p);
                r.trace_y = 2.0 * std::cos(b * pi / d.q);
                r.trace_m = 2.0 * std::cos(k * pi / d.N);
                r.acyclic = (a % 2 == 1) && (b % 2 == 1);
                reps.push_back(r);
            }
        }
    return reps;
}

BigFloat inverse_torsion(const SurgeryDescriptor& d, const RepClass& r, mpfr_prec_t precision) {
    if (!r.acyclic) throw NotAcyclic("torsion is zero for a non-acyclic class");
    const BigFloat pi = BigFloat::pi(precision);
    const BigFloat one{1.0, precision};
    const BigFloat two{2.0, precision};
    auto angle_cos = [&](long long num, long long den) {
        return cos(pi * BigFloat{static_cast<double>(num), precision} / BigFloat{static_cast<double>(den), precision});
    };
    return two * (one - angle_cos(r.a, d.p)) * (one - angle_cos(r.b, d.q)) *
           (one + angle_cos(static_cast<long long>(d.p) * d.q * r.k, d.N));
}

BigFloat torsion_value(const SurgeryDescriptor& d, const RepClass& r, mpfr_prec_t precision) {
    BigFloat inv = inverse_torsion(d, r, precision);
    if (abs(inv) < BigFloat{1e-12, precision})
        throw DegenerateDenominator("torsion_value: 1 + cos(pqk pi/N) vanishes");
    return BigFloat{1.0, precision} / inv;
}

IntPoly x_polynomial(const SurgeryDescriptor& d) {
    if (d.n == 0) throw ZeroSurgery("x_polynomial: n = 0");
    if (d.parity_case == ParityCase::BothOddNOdd) return chebyshev_T(d.N);

    IntPoly diff = chebyshev_T(d.N + 1) - chebyshev_T(d.N - 1);
    IntPoly quot = exact_div(diff, IntPoly{{-2, 0, 2}});
    assert(quot == chebyshev_U(d.N - 1));
    return d.n > 0 ? quot : -quot;
}

std::vector<NFElement> y_polynomial(const SurgeryDescriptor& d, int a, int b,
                                    std::shared_ptr<const FieldContext> ctx) {
    if (d.n == 0) return {NFElement::from_rational(ctx, 1)};

    const IntPoly P = even_part(x_polynomial(d));
    const NFElement four_c = c_constant(ctx, a, b).scaled(4);
    const NFElement inv_four_c = four_c.inverse();

    std::vector<NFElement> y;
    y.reserve(static_cast<std::size_t>(P.degree()) + 1);
    NFElement pow = NFElement::from_rational(ctx, 1);
    for (int j = 0; j <= P.degree(); ++j) {
        y.push_back(pow.scaled(Rat{P.coeff(j)}));
        pow = pow * inv_four_c;
    }
    return y;
}

int normalization_value(const SurgeryDescriptor& d) {
    if (d.n == 0) return 1;
    long long num = 0;
    const long long N = d.N, p = d.p, q = d.q;
    switch (d.parity_case) {
        case ParityCase::PEvenQOdd: num = (N - 1) * p * (q - 1); break;
        case ParityCase::POddQEven: num = (N - 1) * (p - 1) * q; break;
        case ParityCase::BothOddNEven: num = (N - 1) * (p - 1) * (q - 1); break;
        case ParityCase::BothOddNOdd: num = N * (p - 1) * (q - 1); break;
        case ParityCase::NZero: return 1;
    }
    assert(num % 8 == 0);
    return (num / 8) % 2 == 0 ? 1 : -1;
}

int degree_formula(const SurgeryDescriptor& d) {
    if (d.n == 0) return 0;
    long long num = 0;
    const long long N = d.N, p = d.p, q = d.q;
    switch (d.parity_case) {
        case ParityCase::PEvenQOdd: num = (N - 1) * p * (q - 1); break;
        case ParityCase::POddQEven: num = (N - 1) * (p - 1) * q; break;
        case ParityCase::BothOddNEven: num = (N - 1) * (p - 1) * (q - 1); break;
        case ParityCase::BothOddNOdd: num = N * (p - 1) * (q - 1); break;
        case ParityCase::NZero: return 0;
    }
    assert(num % 8 == 0);
    return static_cast<int>(num / 8);
}

TorsionPolynomial sigma(const SurgeryDescriptor& d) {
    TorsionPolynomial result;
    result.descriptor = d;
    if (d.n == 0) {
        result.sigma = IntPoly::constant(1);
        return result;
    }

    auto ctx = std::make_shared<const FieldContext>(d.p, d.q);
    const auto pairs = acyclic_pairs(d.p, d.q);
    result.factors.resize(pairs.size());

    // The per-pair Y computations are independent.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (pairs.size() > 1)
#endif
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        result.factors[i] = YFactor{a, b, y_polynomial(d, a, b, ctx)};
    }

    std::vector<NFElement> prod{NFElement::from_rational(ctx, 1)};
    for (const auto& f : result.factors) prod = nf_poly_mul(prod, f.coeffs);

    std::vector<Int> coeffs;
    coeffs.reserve(prod.size());
    for (std::size_t j = 0; j < prod.size(); ++j) {
        if (!prod[j].is_rational())
            throw NonRationalCoefficient("sigma: coefficient of t^" + std::to_string(j) + " is not rational");
        const Rat& r = prod[j].rational_value();
        if (r.get_den() != 1)
            throw NonIntegerCoefficient("sigma: coefficient of t^" + std::to_string(j) + " = " + r.get_str());
        coeffs.push_back(r.get_num());
    }
    IntPoly poly{std::move(coeffs)};

    const int want = normalization_value(d);
    const Int got = poly.coeff(0);
    if (got != want) {
        assert(got == -want);
        poly = -poly;
        result.sign_corrected = true;
    }
    assert(poly.degree() == degree_formula(d));
    result.sigma = std::move(poly);
    return result;
}

std::vector<NFElement> three_term_D(const SurgeryDescriptor& d, int a, int b,
                                    std::shared_ptr<const FieldContext> ctx) {
    const bool one_even = d.p % 2 == 0 || d.q % 2 == 0;
    const int order = one_even ? d.p * d.q : 2 * d.p * d.q;
    const IntPoly P = even_part(chebyshev_T(order));

    const NFElement inv_four_c = c_constant(ctx, a, b).scaled(4).inverse();
    std::vector<NFElement> coeffs;
    coeffs.reserve(static_cast<std::size_t>(P.degree()) + 1);
    NFElement pow = NFElement::from_rational(ctx, 1);
    for (int j = 0; j <= P.degree(); ++j) {
        coeffs.push_back(pow.scaled(Rat{2 * P.coeff(j)}));
        pow = pow * inv_four_c;
    }
    return coeffs;
}

ThreeTermReport verify_three_term(int p, int q, int n_bound) {
    ThreeTermReport report;
    report.step = (p % 2 == 0 || q % 2 == 0) ? 1 : 2;
    const int step = report.step;

    auto ctx = std::make_shared<const FieldContext>(p, q);
    for (auto [a, b] : acyclic_pairs(p, q)) {
        const auto D = three_term_D(make_descriptor(p, q, 1), a, b, ctx);
        // Y for every n in [-(n_bound+step), n_bound+step], cached by offset.
        std::vector<std::vector<NFElement>> Y;
        const int lo = -(n_bound + step);
        for (int n = lo; n <= n_bound + step; ++n)
            Y.push_back(y_polynomial(make_descriptor(p, q, n), a, b, ctx));

        for (int n = -n_bound; n <= n_bound; ++n) {
            const auto& y_hi = Y[static_cast<std::size_t>(n + step - lo)];
            const auto& y_mid = Y[static_cast<std::size_t>(n - lo)];
            const auto& y_lo = Y[static_cast<std::size_t>(n - step - lo)];
            const auto rhs = nf_poly_sub(nf_poly_mul(D, y_mid), y_lo);

            ThreeTermCheck check;
            check.a = a;
            check.b = b;
            check.n = n;
            check.pass = true;
            const std::size_t len = std::max(y_hi.size(), rhs.size());
            for (std::size_t j = 0; j < len; ++j) {
                const NFElement& lhs_j = j < y_hi.size() ? y_hi[j] : NFElement::zero(ctx);
                const NFElement& rhs_j = j < rhs.size() ? rhs[j] : NFElement::zero(ctx);
                if (!(lhs_j == rhs_j)) {
                    check.pass = false;
                    check.first_mismatch = static_cast<int>(j);
                    break;
                }
            }
            report.checks.push_back(check);
        }
    }
    return report;
}

}  // namespace torsionpoly
