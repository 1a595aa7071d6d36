#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace torsionpoly {

/// Thin RAII wrapper over mpfr_t. Binary operations compute at the larger
/// of the two operand precisions.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128) : prec_(prec) { mpfr_init2(v_, prec_); mpfr_set_zero(v_, 1); }
    BigFloat(double d, mpfr_prec_t prec) : prec_(prec) { mpfr_init2(v_, prec_); mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(const mpz_class& z, mpfr_prec_t prec) : prec_(prec) { mpfr_init2(v_, prec_); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    BigFloat(const mpq_class& q, mpfr_prec_t prec) : prec_(prec) { mpfr_init2(v_, prec_); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

    BigFloat(const BigFloat& o) : prec_(o.prec_) { mpfr_init2(v_, prec_); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) { mpfr_init2(v_, prec_); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) noexcept { std::swap(prec_, o.prec_); mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return prec_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_div); }
    BigFloat operator-() const {
        BigFloat r(prec_);
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat cos(const BigFloat& a) {
        BigFloat r(a.prec_);
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec_);
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    std::string to_string(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

  private:
    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static BigFloat binop(const BigFloat& a, const BigFloat& b, BinFn fn) {
        BigFloat r(std::max(a.prec_, b.prec_));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec_;
    mpfr_t v_;
};

}  // namespace torsionpoly
