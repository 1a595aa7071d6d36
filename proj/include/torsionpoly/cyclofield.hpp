#pragma once

#include <memory>
#include <vector>

#include "torsionpoly/bigfloat.hpp"
#include "torsionpoly/intpoly.hpp"

namespace torsionpoly {

struct InvalidOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ContextMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAConjugate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cyclotomic polynomial Phi_n, by dividing x^n - 1 by the cyclotomics of
/// all proper divisors of n.
IntPoly cyclotomic(int n);

/// Monic integer minimal polynomial of 2cos(pi/m), obtained from
/// Phi_{2m}(x) = x^d psi(x + 1/x) with d = phi(2m)/2.
IntPoly min_poly_2cos(int m);

/// The quotient ring Q[u,v]/(m_p(u), m_q(v)) with u = 2cos(pi/p),
/// v = 2cos(pi/q). Immutable after construction.
class FieldContext {
  public:
    FieldContext(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    int dp() const { return dp_; }
    int dq() const { return dq_; }
    const IntPoly& mp() const { return mp_; }
    const IntPoly& mq() const { return mq_; }

    /// u^e reduced mod m_p, as integer coefficients on 1, u, ..., u^{dp-1}.
    /// Valid for 0 <= e <= 2(dp-1); same on the v side.
    const std::vector<Int>& u_power(int e) const { return upow_[static_cast<std::size_t>(e)]; }
    const std::vector<Int>& v_power(int e) const { return vpow_[static_cast<std::size_t>(e)]; }

  private:
    static std::vector<std::vector<Int>> power_table(const IntPoly& m);

    int p_, q_;
    IntPoly mp_, mq_;
    int dp_, dq_;
    std::vector<std::vector<Int>> upow_, vpow_;
};

enum class Side { P, Q };

/// Element of the quotient ring: coefficient matrix on the basis u^i v^j,
/// 0 <= i < dp, 0 <= j < dq, entries exact rationals kept reduced.
class NFElement {
  public:
    NFElement(std::shared_ptr<const FieldContext> ctx, std::vector<Rat> coeffs);
    static NFElement zero(std::shared_ptr<const FieldContext> ctx);
    static NFElement from_rational(std::shared_ptr<const FieldContext> ctx, const Rat& r);
    /// The generator u (Side::P) or v (Side::Q).
    static NFElement generator(std::shared_ptr<const FieldContext> ctx, Side side);

    const std::shared_ptr<const FieldContext>& ctx() const { return ctx_; }
    const Rat& at(int i, int j) const;
    bool is_zero() const;
    /// True iff every basis monomial other than u^0 v^0 has zero coefficient.
    bool is_rational() const;
    /// The (0,0) entry; call only when is_rational().
    const Rat& rational_value() const { return at(0, 0); }

    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    NFElement operator-() const;
    NFElement scaled(const Rat& r) const;
    bool operator==(const NFElement& o) const;

    /// Multiplicative inverse via a linear solve over Q on the
    /// multiplication-by-this operator. Throws NotInvertible.
    NFElement inverse() const;

    /// Numeric value at the conjugate (u,v) -> (2cos(conj_a pi/p), 2cos(conj_b pi/q)).
    /// Validates that the substituted values are roots of m_p, m_q.
    BigFloat embed(int conj_a, int conj_b, mpfr_prec_t precision = 128) const;

  private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(ctx_->dq()) + static_cast<std::size_t>(j); }
    static void check_same_ctx(const NFElement& a, const NFElement& b);

    std::shared_ptr<const FieldContext> ctx_;
    std::vector<Rat> coeffs_;  // row-major dp x dq
};

/// Exact element equal to cos(numerator*pi/p) (Side::P) or
/// cos(numerator*pi/q) (Side::Q), via T_numerator applied to u/2 or v/2.
NFElement cos_element(std::shared_ptr<const FieldContext> ctx, Side side, int numerator);

/// (1 - cos(a pi/p))(1 - cos(b pi/q)); requires 0 < a < p, 0 < b < q.
NFElement c_constant(std::shared_ptr<const FieldContext> ctx, int a, int b);

}  // namespace torsionpoly
