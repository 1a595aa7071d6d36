#include "torsionpoly/cyclofield.hpp"

#include <cassert>
#include <map>
#include <mutex>

namespace torsionpoly {

namespace {

std::map<int, IntPoly> g_cyclo_cache;
std::mutex g_cyclo_mutex;

IntPoly x_pow_minus_one(int n) {
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    c[0] = -1;
    c.back() = 1;
    return IntPoly{std::move(c)};
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace

IntPoly cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    if (auto it = g_cyclo_cache.find(n); it != g_cyclo_cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0 || g_cyclo_cache.count(m)) continue;
        IntPoly num = x_pow_minus_one(m);
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = exact_div(num, g_cyclo_cache.at(d));
        g_cyclo_cache.emplace(m, std::move(num));
    }
    return g_cyclo_cache.at(n);
}

IntPoly min_poly_2cos(int m) {
    if (m < 2) throw InvalidOrder("min_poly_2cos: m must be >= 2");
    IntPoly phi = cyclotomic(2 * m);
    const int d = phi.degree() / 2;
    assert(phi.degree() == 2 * d && d == euler_phi(2 * m) / 2);

    // Phi_{2m} is palindromic: peel off c_i * x^{d-i} (x^2+1)^i top-down,
    // using x^d (x + 1/x)^i = x^{d-i} (x^2+1)^i.
    std::vector<IntPoly> binom(static_cast<std::size_t>(d) + 1);
    binom[0] = IntPoly::constant(1);
    const IntPoly x2p1{{1, 0, 1}};
    for (int i = 1; i <= d; ++i) binom[static_cast<std::size_t>(i)] = binom[static_cast<std::size_t>(i - 1)] * x2p1;

    std::vector<Int> psi(static_cast<std::size_t>(d) + 1);
    IntPoly rem = phi;
    for (int i = d; i >= 0; --i) {
        Int c = rem.coeff(d + i);
        psi[static_cast<std::size_t>(i)] = c;
        if (c != 0) {
            IntPoly term = binom[static_cast<std::size_t>(i)].scaled(c);
            rem = rem - IntPoly::monomial(d - i) * term;
        }
    }
    assert(rem.is_zero());
    return IntPoly{std::move(psi)};
}

std::vector<std::vector<Int>> FieldContext::power_table(const IntPoly& m) {
    const int d = m.degree();
    const int count = std::max(1, 2 * d - 1);
    std::vector<std::vector<Int>> table(static_cast<std::size_t>(count), std::vector<Int>(static_cast<std::size_t>(d)));
    table[0][0] = 1;
    for (int e = 1; e < count; ++e) {
        auto& cur = table[static_cast<std::size_t>(e)];
        const auto& prev = table[static_cast<std::size_t>(e - 1)];
        Int carry = prev[static_cast<std::size_t>(d - 1)];  // coefficient landing on x^d
        for (int i = d - 1; i >= 1; --i) cur[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
        cur[0] = 0;
        if (carry != 0)
            for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] -= carry * m.coeff(i);
    }
    return table;
}

FieldContext::FieldContext(int p, int q)
    : p_(p), q_(q), mp_(min_poly_2cos(p)), mq_(min_poly_2cos(q)), dp_(mp_.degree()), dq_(mq_.degree()) {
    assert(dp_ == euler_phi(2 * p) / 2);
    assert(dq_ == euler_phi(2 * q) / 2);
    upow_ = power_table(mp_);
    vpow_ = power_table(mq_);
}

NFElement::NFElement(std::shared_ptr<const FieldContext> ctx, std::vector<Rat> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    assert(coeffs_.size() == static_cast<std::size_t>(ctx_->dp()) * static_cast<std::size_t>(ctx_->dq()));
    for (auto& c : coeffs_) c.canonicalize();
}

NFElement NFElement::zero(std::shared_ptr<const FieldContext> ctx) {
    std::vector<Rat> c(static_cast<std::size_t>(ctx->dp()) * static_cast<std::size_t>(ctx->dq()));
    return NFElement{std::move(ctx), std::move(c)};
}

NFElement NFElement::from_rational(std::shared_ptr<const FieldContext> ctx, const Rat& r) {
    NFElement e = zero(std::move(ctx));
    e.coeffs_[0] = r;
    return e;
}

NFElement NFElement::generator(std::shared_ptr<const FieldContext> ctx, Side side) {
    NFElement e = zero(ctx);
    if (side == Side::P) {
        if (ctx->dp() == 1) {
            // u is rational: u = -m_p(0) since m_p = x - u.
            e.coeffs_[0] = Rat{-ctx->mp().coeff(0)};
        } else {
            e.coeffs_[e.idx(1, 0)] = 1;
        }
    } else {
        if (ctx->dq() == 1) {
            e.coeffs_[0] = Rat{-ctx->mq().coeff(0)};
        } else {
            e.coeffs_[e.idx(0, 1)] = 1;
        }
    }
    return e;
}

const Rat& NFElement::at(int i, int j) const { return coeffs_[idx(i, j)]; }

bool NFElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool NFElement::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

void NFElement::check_same_ctx(const NFElement& a, const NFElement& b) {
    if (a.ctx_ != b.ctx_ && (a.ctx_->p() != b.ctx_->p() || a.ctx_->q() != b.ctx_->q()))
        throw ContextMismatch("NFElement: operands from different field contexts");
}

NFElement operator+(const NFElement& a, const NFElement& b) {
    NFElement::check_same_ctx(a, b);
    NFElement r = a;
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
    return r;
}

NFElement operator-(const NFElement& a, const NFElement& b) { return a + (-b); }

NFElement NFElement::operator-() const {
    NFElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

NFElement NFElement::scaled(const Rat& s) const {
    NFElement r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

bool NFElement::operator==(const NFElement& o) const {
    check_same_ctx(*this, o);
    return coeffs_ == o.coeffs_;
}

NFElement operator*(const NFElement& a, const NFElement& b) {
    NFElement::check_same_ctx(a, b);
    const auto& ctx = *a.ctx_;
    const int dp = ctx.dp(), dq = ctx.dq();
    const int ep = 2 * dp - 1, eq = 2 * dq - 1;

    // Convolve in u and v, then fold the high powers back with the tables.
    std::vector<Rat> tmp(static_cast<std::size_t>(ep) * static_cast<std::size_t>(eq));
    for (int i = 0; i < dp; ++i)
        for (int j = 0; j < dq; ++j) {
            const Rat& ca = a.at(i, j);
            if (ca == 0) continue;
            for (int k = 0; k < dp; ++k)
                for (int l = 0; l < dq; ++l) {
                    const Rat& cb = b.at(k, l);
                    if (cb == 0) continue;
                    tmp[static_cast<std::size_t>(i + k) * static_cast<std::size_t>(eq) + static_cast<std::size_t>(j + l)] += ca * cb;
                }
        }

    NFElement r = NFElement::zero(a.ctx_);
    for (int e = 0; e < ep; ++e)
        for (int f = 0; f < eq; ++f) {
            const Rat& c = tmp[static_cast<std::size_t>(e) * static_cast<std::size_t>(eq) + static_cast<std::size_t>(f)];
            if (c == 0) continue;
            const auto& ur = ctx.u_power(e);
            const auto& vr = ctx.v_power(f);
            for (int i = 0; i < dp; ++i) {
                if (ur[static_cast<std::size_t>(i)] == 0) continue;
                for (int j = 0; j < dq; ++j) {
                    if (vr[static_cast<std::size_t>(j)] == 0) continue;
                    r.coeffs_[r.idx(i, j)] += c * Rat{ur[static_cast<std::size_t>(i)] * vr[static_cast<std::size_t>(j)]};
                }
            }
        }
    return r;
}

NFElement NFElement::inverse() const {
    const int dp = ctx_->dp(), dq = ctx_->dq();
    const int dim = dp * dq;

    // Columns of M are (this * basis monomial) in basis coordinates.
    std::vector<std::vector<Rat>> M(static_cast<std::size_t>(dim), std::vector<Rat>(static_cast<std::size_t>(dim)));
    for (int col = 0; col < dim; ++col) {
        NFElement basis = zero(ctx_);
        basis.coeffs_[static_cast<std::size_t>(col)] = 1;
        NFElement prod = *this * basis;
        for (int row = 0; row < dim; ++row) M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = prod.coeffs_[static_cast<std::size_t>(row)];
    }

    // Solve M x = e_0 by Gaussian elimination over Q.
    std::vector<Rat> rhs(static_cast<std::size_t>(dim));
    rhs[0] = 1;
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int row = col; row < dim; ++row)
            if (M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw NotInvertible("NFElement::inverse: singular multiplication operator");
        std::swap(M[static_cast<std::size_t>(col)], M[static_cast<std::size_t>(pivot)]);
        std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(pivot)]);
        const Rat inv_p = 1 / M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = col; j < dim; ++j) M[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= inv_p;
        rhs[static_cast<std::size_t>(col)] *= inv_p;
        for (int row = 0; row < dim; ++row) {
            if (row == col) continue;
            const Rat f = M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < dim; ++j) M[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -= f * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            rhs[static_cast<std::size_t>(row)] -= f * rhs[static_cast<std::size_t>(col)];
        }
    }
    return NFElement{ctx_, std::move(rhs)};
}

BigFloat NFElement::embed(int conj_a, int conj_b, mpfr_prec_t precision) const {
    const BigFloat pi = BigFloat::pi(precision);
    const BigFloat two{2.0, precision};
    const BigFloat u = two * cos(pi * BigFloat{static_cast<double>(conj_a), precision} / BigFloat{static_cast<double>(ctx_->p()), precision});
    const BigFloat v = two * cos(pi * BigFloat{static_cast<double>(conj_b), precision} / BigFloat{static_cast<double>(ctx_->q()), precision});

    auto residual = [&](const IntPoly& m, const BigFloat& x) {
        BigFloat acc{0.0, precision};
        for (int i = m.degree(); i >= 0; --i) acc = acc * x + BigFloat{Int{m.coeff(i)}, precision};
        return abs(acc);
    };
    const BigFloat tol{1e-9, precision};
    if (!(residual(ctx_->mp(), u) < tol)) throw NotAConjugate("embed: 2cos(" + std::to_string(conj_a) + "pi/p) is not a root of m_p");
    if (!(residual(ctx_->mq(), v) < tol)) throw NotAConjugate("embed: 2cos(" + std::to_string(conj_b) + "pi/q) is not a root of m_q");

    // Horner in u of Horner-in-v rows.
    BigFloat acc{0.0, precision};
    for (int i = ctx_->dp() - 1; i >= 0; --i) {
        BigFloat row{0.0, precision};
        for (int j = ctx_->dq() - 1; j >= 0; --j) row = row * v + BigFloat{Rat{at(i, j)}, precision};
        acc = acc * u + row;
    }
    return acc;
}

NFElement cos_element(std::shared_ptr<const FieldContext> ctx, Side side, int numerator) {
    const int modulus = side == Side::P ? ctx->p() : ctx->q();
    if (numerator <= 0 || numerator >= modulus) throw OutOfRange("cos_element: numerator out of (0, modulus)");

    // cos(a pi/m) = T_a(cos(pi/m)) evaluated at generator/2.
    const NFElement half_gen = NFElement::generator(ctx, side).scaled(Rat{1, 2});
    const IntPoly T = chebyshev_T(numerator);
    NFElement acc = NFElement::zero(ctx);
    for (int i = T.degree(); i >= 0; --i) {
        acc = acc * half_gen + NFElement::from_rational(ctx, Rat{T.coeff(i)});
    }
    return acc;
}

NFElement c_constant(std::shared_ptr<const FieldContext> ctx, int a, int b) {
    const NFElement one = NFElement::from_rational(ctx, 1);
    return (one - cos_element(ctx, Side::P, a)) * (one - cos_element(ctx, Side::Q, b));
}

}  // namespace torsionpoly
