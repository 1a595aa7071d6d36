#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torsionpoly/cyclofield.hpp"
#include "torsionpoly/intpoly.hpp"

namespace torsionpoly {

struct NotCoprime : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadParameters : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroSurgery : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAcyclic : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonRationalCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegerCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ParityCase { PEvenQOdd, POddQEven, BothOddNEven, BothOddNOdd, NZero };

/// 1/n-surgery on the (p,q)-torus knot; the result is the Brieskorn sphere
/// Sigma(p, q, N) with N = |pqn + 1|.
struct SurgeryDescriptor {
    int p = 0;
    int q = 0;
    int n = 0;
    int N = 0;
    ParityCase parity_case = ParityCase::NZero;
};

SurgeryDescriptor make_descriptor(int p, int q, int n);

/// Conjugacy class of an irreducible SL(2,C) representation, pinned by the
/// triple (a,b,k) fixing the traces on the two knot-group generators and
/// the meridian.
struct RepClass {
    int a = 0;
    int b = 0;
    int k = 0;
    double trace_x = 0.0;  // 2cos(a pi / p)
    double trace_y = 0.0;  // 2cos(b pi / q)
    double trace_m = 0.0;  // 2cos(k pi / N)
    bool acyclic = false;
};

/// All classes satisfying 0<a<p, 0<b<q, a=b mod 2, 0<k<N, k=na mod 2,
/// in lexicographic (a,b,k) order. Throws ZeroSurgery for n = 0.
std::vector<RepClass> enumerate_reps(const SurgeryDescriptor& d);

/// 1/torsion for an acyclic class:
/// 2 (1 - cos(a pi/p)) (1 - cos(b pi/q)) (1 + cos(pqk pi/N)).
BigFloat inverse_torsion(const SurgeryDescriptor& d, const RepClass& r, mpfr_prec_t precision = 128);
/// Johnson's torsion value itself (the reciprocal of the above).
BigFloat torsion_value(const SurgeryDescriptor& d, const RepClass& r, mpfr_prec_t precision = 128);

/// X_n in the x variable: +-(T_{N+1} - T_{N-1}) / (2(x^2-1)) for the cases
/// with N odd (sign by the sign of n), T_N when p, q, n are all odd.
IntPoly x_polynomial(const SurgeryDescriptor& d);

/// Coefficients of Y_{(n,a,b)}(t), ascending, as exact elements of the
/// field context: coefficient j is P_j (4 C_{(p,q,a,b)})^{-j} with
/// P = even_part(x_polynomial).
std::vector<NFElement> y_polynomial(const SurgeryDescriptor& d, int a, int b,
                                    std::shared_ptr<const FieldContext> ctx);

/// Normalization sign (-1)^e with the parity-case exponent e; +1 for n=0.
int normalization_value(const SurgeryDescriptor& d);

/// Degree of sigma by the parity-case formula; 0 for n=0.
int degree_formula(const SurgeryDescriptor& d);

struct YFactor {
    int a = 0;
    int b = 0;
    std::vector<NFElement> coeffs;  // ascending in t
};

struct TorsionPolynomial {
    IntPoly sigma;
    SurgeryDescriptor descriptor;
    std::vector<YFactor> factors;
    bool sign_corrected = false;
};

/// sigma_{(p,q,n)}(t) = prod over acyclic (a,b) of Y_{(n,a,b)}(t),
/// converted to integer coefficients and sign-normalized so that
/// sigma(0) = normalization_value(d).
TorsionPolynomial sigma(const SurgeryDescriptor& d);

/// Coefficients of D(t) = 2 T_{pq}(sqrt(t)/(2 sqrt(C))) when p or q is
/// even, 2 T_{2pq}(...) when both are odd.
std::vector<NFElement> three_term_D(const SurgeryDescriptor& d, int a, int b,
                                    std::shared_ptr<const FieldContext> ctx);

struct ThreeTermCheck {
    int a = 0;
    int b = 0;
    int n = 0;         // identity checked at this n: Y_{n+s} = D Y_n - Y_{n-s}
    bool pass = false;
    int first_mismatch = -1;  // t-degree of the first differing coefficient
};

struct ThreeTermReport {
    int step = 0;  // 1 when p or q even, 2 when both odd
    std::vector<ThreeTermCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Exact check of the 3-term relation for every acyclic (a,b) and every
/// center n with |n| <= n_bound.
ThreeTermReport verify_three_term(int p, int q, int n_bound);

/// Acyclic (a,b) pairs (both odd, 0<a<p, 0<b<q) in lexicographic order.
std::vector<std::pair<int, int>> acyclic_pairs(int p, int q);

std::string to_string(ParityCase c);

}  // namespace torsionpoly
