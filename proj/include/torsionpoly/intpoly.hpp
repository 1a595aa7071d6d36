#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace torsionpoly {

using Int = mpz_class;
using Rat = mpq_class;

struct NonZeroRemainder : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegerQuotient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OddCoefficientPresent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored ascending by degree. The zero polynomial is the
/// empty coefficient vector; its degree is the sentinel kDegNegInf.
class IntPoly {
  public:
    static constexpr int kDegNegInf = std::numeric_limits<int>::min();

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Int c);
    static IntPoly monomial(int degree, Int c = 1);

    int degree() const { return coeffs_.empty() ? kDegNegInf : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero outside the stored range.
    const Int& coeff(int i) const;
    const Int& leading() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    IntPoly scaled(const Int& c) const;

    Int eval(const Int& x) const;
    double eval(double x) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Dense univariate polynomial over exact rationals, every coefficient
/// kept reduced (GMP canonicalizes mpq on assignment).
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    explicit RatPoly(const IntPoly& p);

    int degree() const { return coeffs_.empty() ? IntPoly::kDegNegInf : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Euclidean division: returns {quotient, remainder}.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& den) const;

    /// Converts back to IntPoly; throws NonIntegerQuotient if any
    /// coefficient has a denominator.
    IntPoly to_int_poly() const;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Chebyshev polynomial of the first kind T_l, by the recurrence
/// T_0 = 1, T_1 = x, T_{l+1} = 2x T_l - T_{l-1}.
IntPoly chebyshev_T(int l);

/// Chebyshev polynomial of the second kind U_l (U_0 = 1, U_1 = 2x).
IntPoly chebyshev_U(int l);

/// Exact division in Z[x]. Throws NonZeroRemainder if den does not divide
/// num, NonIntegerQuotient if the quotient is rational but not integral.
IntPoly exact_div(const IntPoly& num, const IntPoly& den);

/// For p with only even-degree terms, returns P with P(x^2) = p(x).
/// Throws OddCoefficientPresent otherwise.
IntPoly even_part(const IntPoly& p);

/// Self-test: 2 T_m T_n == T_{m+n} + T_{m-n} (requires m >= n >= 0).
bool chebyshev_product_identity_check(int m, int n);

namespace detail {
/// Serial schoolbook product, kept as the reference for the parallel path.
std::vector<Int> mul_serial(const std::vector<Int>& a, const std::vector<Int>& b);
/// OpenMP product, parallel over output coefficients.
std::vector<Int> mul_parallel(const std::vector<Int>& a, const std::vector<Int>& b);
}  // namespace detail

}  // namespace torsionpoly
