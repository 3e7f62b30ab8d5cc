#ifndef EZETA_RATIONAL_HPP
#define EZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ezeta {

// Exact arbitrary-size integers and rationals. mpq_class keeps values
// canonical (lowest terms, denominator > 0), which is exactly the invariant
// we need everywhere.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k); zero outside the Pascal triangle.
inline Int binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int two_pow(unsigned long e) { return pow_int(2, e); }

// x^e for integer e (negative allowed when x != 0).
inline Rational pow_rational(const Rational& x, long e) {
    if (e == 0) return 1;
    Rational r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(x.get_mpq_t()), a);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(x.get_mpq_t()), a);
    if (e < 0) {
        if (x == 0) throw std::domain_error("pow_rational: 0 to negative power");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

// p-adic valuation of a nonzero rational; throws on zero (valuation infinite).
inline long valuation(const Rational& x, long p) {
    if (x == 0) throw std::domain_error("valuation: zero has infinite valuation");
    long v = 0;
    Int n = x.get_num();
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    Int d = x.get_den();
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p));
        --v;
    }
    return v;
}

// Serialized as "num/den", denominator always written so output stays uniform.
inline std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace ezeta

#endif
