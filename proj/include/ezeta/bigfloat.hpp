#ifndef EZETA_BIGFLOAT_HPP
#define EZETA_BIGFLOAT_HPP

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "ezeta/rational.hpp"

namespace ezeta {

// Arbitrary-precision real with an explicit precision in bits. Values are
// immutable after construction; every operation rounds to nearest and the
// result carries min(operand precisions). Composite computations should run
// with kGuardBits extra and round once at the end.
inline constexpr long kGuardBits = 16;

class BigFloat {
public:
    explicit BigFloat(long prec_bits) : prec_(check_prec(prec_bits)) {
        mpfr_init2(v_, prec_);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(long value, long prec_bits) : prec_(check_prec(prec_bits)) {
        mpfr_init2(v_, prec_);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }

    BigFloat(const Rational& r, long prec_bits) : prec_(check_prec(prec_bits)) {
        mpfr_init2(v_, prec_);
        mpfr_set_q(v_, r.get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(BigFloat o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    long precision() const { return prec_; }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw_mut() { return v_; }

    BigFloat round_to(long prec_bits) const {
        BigFloat r(prec_bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat abs() const {
        BigFloat r(prec_);
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat neg() const {
        BigFloat r(prec_);
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    // value * 2^e, exact.
    BigFloat ldexp(long e) const {
        BigFloat r(prec_);
        mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    static BigFloat two_pow(long e, long prec_bits) {
        BigFloat r(1, prec_bits);
        return r.ldexp(e);
    }

    std::string str(std::size_t digits) const {
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
        std::string m(s);
        mpfr_free_str(s);
        bool negative = !m.empty() && m[0] == '-';
        std::string digits_part = negative ? m.substr(1) : m;
        std::string out = negative ? "-" : "";
        out += "0." + digits_part + "e" + std::to_string(static_cast<long>(e));
        return out;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::min(a.prec_, b.prec_));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::min(a.prec_, b.prec_));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::min(a.prec_, b.prec_));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
        BigFloat r(std::min(a.prec_, b.prec_));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return mpfr_less_p(a.v_, b.v_) != 0;
    }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) {
        return mpfr_lessequal_p(a.v_, b.v_) != 0;
    }

private:
    static long check_prec(long p) {
        if (p < 2) throw std::invalid_argument("BigFloat: precision must be >= 2 bits");
        return p;
    }

    mpfr_t v_;
    long prec_;
};

// pi via the Machin formula 4*(4*atan(1/5) - atan(1/239)), with the atan
// series summed in scaled integer arithmetic. Error < 2^(4-precision).
inline BigFloat pi(long precision) {
    if (precision < 8) throw std::invalid_argument("pi: precision must be >= 8");
    const long w = precision + 2 * kGuardBits;
    auto atan_inv = [w](unsigned long x) {
        // atan(1/x) * 2^w, truncated
        Int x2 = Int(x) * x;
        Int term = two_pow(static_cast<unsigned long>(w)) / x;
        Int sum = 0;
        for (unsigned long k = 0; term != 0; ++k, term /= x2) {
            Int t = term / (2 * k + 1);
            sum += (k % 2 == 0) ? t : -t;
        }
        return sum;
    };
    Int scaled = 4 * (4 * atan_inv(5) - atan_inv(239));
    BigFloat r(precision);
    mpfr_set_z(r.raw_mut(), scaled.get_mpz_t(), MPFR_RNDN);
    return r.ldexp(-w);
}

inline BigFloat log(const BigFloat& x, long precision) {
    if (x.sign() <= 0) throw std::domain_error("log: argument must be positive");
    BigFloat r(precision);
    mpfr_log(r.raw_mut(), x.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat exp(const BigFloat& x, long precision) {
    BigFloat r(precision);
    mpfr_exp(r.raw_mut(), x.raw(), MPFR_RNDN);
    return r;
}

// x^s = exp(s * log x) for x > 0, computed with guard bits.
inline BigFloat pow_real(const BigFloat& x, const BigFloat& s, long precision) {
    if (x.sign() <= 0) throw std::domain_error("pow_real: base must be positive");
    const long wp = precision + kGuardBits;
    BigFloat t = log(x.round_to(wp), wp);
    return exp(t * s.round_to(wp), wp).round_to(precision);
}

inline BigFloat abs_diff(const BigFloat& a, const BigFloat& b) { return (a - b).abs(); }

// Relative when |target| >= 1, absolute otherwise.
inline bool within_tolerance(const BigFloat& value, const BigFloat& target, const BigFloat& tol) {
    BigFloat d = abs_diff(value, target);
    BigFloat ta = target.abs();
    if (BigFloat(1, target.precision()) <= ta) return d <= tol * ta;
    return d <= tol;
}

} // namespace ezeta

#endif
