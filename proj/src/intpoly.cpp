#include "torsionpoly/intpoly.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torsionpoly {

namespace {
const Int kZero = 0;
// Below this many coefficient products the OpenMP fork costs more than it saves.
constexpr std::size_t kParallelCutoff = 4096;
}  // namespace

IntPoly IntPoly::constant(Int c) {
    if (c == 0) return IntPoly{};
    return IntPoly{{std::move(c)}};
}

IntPoly IntPoly::monomial(int degree, Int c) {
    if (c == 0) return IntPoly{};
    std::vector<Int> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return IntPoly{std::move(v)};
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Int& IntPoly::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < coeffs_.size()) r[i] += coeffs_[i];
        if (i < o.coeffs_.size()) r[i] += o.coeffs_[i];
    }
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = -coeffs_[i];
    return IntPoly{std::move(r)};
}

namespace detail {

std::vector<Int> mul_serial(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<Int> mul_parallel(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size() + b.size() - 1;
    std::vector<Int> r(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (std::size_t k = 0; k < n; ++k) {
        Int acc = 0;
        const std::size_t ilo = k >= b.size() ? k - b.size() + 1 : 0;
        const std::size_t ihi = std::min(k, a.size() - 1);
        for (std::size_t i = ilo; i <= ihi; ++i) acc += a[i] * b[k - i];
        r[k] = std::move(acc);
    }
    return r;
}

}  // namespace detail

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (coeffs_.size() * o.coeffs_.size() >= kParallelCutoff)
        return IntPoly{detail::mul_parallel(coeffs_, o.coeffs_)};
    return IntPoly{detail::mul_serial(coeffs_, o.coeffs_)};
}

IntPoly IntPoly::scaled(const Int& c) const {
    std::vector<Int> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeffs_[i] * c;
    return IntPoly{std::move(r)};
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double IntPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly::RatPoly(const IntPoly& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& den) const {
    if (den.is_zero()) throw std::invalid_argument("RatPoly::divmod: zero divisor");
    std::vector<Rat> rem = coeffs_;
    const int dd = den.degree();
    const Rat& lead = den.coeffs_.back();
    std::vector<Rat> quot;
    if (degree() >= dd) quot.resize(static_cast<std::size_t>(degree() - dd) + 1);
    for (int i = degree(); i >= dd; --i) {
        Rat f = rem[static_cast<std::size_t>(i)] / lead;
        quot[static_cast<std::size_t>(i - dd)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= f * den.coeffs_[static_cast<std::size_t>(j)];
    }
    return {RatPoly{std::move(quot)}, RatPoly{std::move(rem)}};
}

IntPoly RatPoly::to_int_poly() const {
    std::vector<Int> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) throw NonIntegerQuotient("coefficient " + c.get_str() + " is not an integer");
        r.push_back(c.get_num());
    }
    return IntPoly{std::move(r)};
}

IntPoly chebyshev_T(int l) {
    if (l < 0) throw std::invalid_argument("chebyshev_T: negative index");
    IntPoly prev = IntPoly::constant(1);
    if (l == 0) return prev;
    IntPoly cur = IntPoly::monomial(1);
    const IntPoly two_x = IntPoly::monomial(1, 2);
    for (int i = 1; i < l; ++i) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly chebyshev_U(int l) {
    if (l < 0) throw std::invalid_argument("chebyshev_U: negative index");
    IntPoly prev = IntPoly::constant(1);
    if (l == 0) return prev;
    IntPoly cur = IntPoly::monomial(1, 2);
    const IntPoly two_x = IntPoly::monomial(1, 2);
    for (int i = 1; i < l; ++i) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    auto [q, r] = RatPoly{num}.divmod(RatPoly{den});
    if (!r.is_zero()) throw NonZeroRemainder("exact_div: nonzero remainder");
    return q.to_int_poly();
}

IntPoly even_part(const IntPoly& p) {
    std::vector<Int> r;
    r.reserve(p.coeffs().size() / 2 + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        if (i % 2 == 1) {
            if (p.coeff(i) != 0) throw OddCoefficientPresent("even_part: nonzero coefficient at degree " + std::to_string(i));
        } else {
            r.push_back(p.coeff(i));
        }
    }
    return IntPoly{std::move(r)};
}

bool chebyshev_product_identity_check(int m, int n) {
    if (m < n || n < 0) throw std::invalid_argument("chebyshev_product_identity_check: need m >= n >= 0");
    IntPoly lhs = chebyshev_T(m) * chebyshev_T(n);
    lhs = lhs.scaled(2);
    IntPoly rhs = chebyshev_T(m + n) + chebyshev_T(m - n);
    return lhs == rhs;
}

}  // namespace torsionpoly
