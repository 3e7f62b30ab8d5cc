#ifndef EZETA_SERIES_EVAL_HPP
#define EZETA_SERIES_EVAL_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>

#include "ezeta/bigfloat.hpp"
#include "ezeta/rational.hpp"
#include "ezeta/special_numbers.hpp"

namespace ezeta {

namespace detail {

inline constexpr std::size_t kEulerMaclaurinCap = 256;

// zeta(s, a) for real s > 1, a > 0 by Euler-Maclaurin:
//   sum_{n<M} (n+a)^{-s} + (M+a)^{1-s}/(s-1) + (M+a)^{-s}/2
//   + sum_j B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * (M+a)^{-s-2j+1}
// Corrections stop when the next term drops below 2^-(precision+8) of the
// accumulated value; hitting the cap raises an error instead of returning
// an unattested result.
inline BigFloat hurwitz_euler_maclaurin(const BigFloat& s, const BigFloat& a, long precision) {
    const long wp = precision + kGuardBits;
    const long cutoff = std::max<long>(16, precision / 2);
    BigFloat sw = s.round_to(wp);
    BigFloat aw = a.round_to(wp);
    BigFloat acc(wp);
    for (long n = 0; n < cutoff; ++n)
        acc = acc + pow_real(BigFloat(n, wp) + aw, sw.neg(), wp);
    BigFloat m = BigFloat(cutoff, wp) + aw;
    BigFloat m_pow = pow_real(m, sw.neg(), wp); // (M+a)^{-s}
    acc = acc + (m_pow * m) / (sw - BigFloat(1, wp));
    acc = acc + m_pow.ldexp(-1);
    BigFloat eps = BigFloat::two_pow(-(precision + 8), wp);
    BigFloat poch = sw;                     // (s)(s+1)...(s+2j-2)
    BigFloat m_tail = m_pow / m;            // (M+a)^{-s-2j+1}
    for (std::size_t j = 1;; ++j) {
        if (j > kEulerMaclaurinCap)
            throw std::runtime_error("euler-maclaurin: correction cap exceeded");
        BigFloat term =
            BigFloat(bernoulli(2 * j) / Rational(factorial(2 * j)), wp) * poch * m_tail;
        if (term.abs() <= eps * acc.abs()) break;
        acc = acc + term;
        BigFloat s1 = sw + BigFloat(static_cast<long>(2 * j - 1), wp);
        BigFloat s2 = sw + BigFloat(static_cast<long>(2 * j), wp);
        poch = poch * s1 * s2;
        m_tail = m_tail / (m * m);
    }
    return acc.round_to(precision);
}

// Chebyshev-coefficient acceleration for sum_{k>=0} (-1)^k a_k with positive
// decreasing a_k; the error after n terms shrinks like (3+sqrt(8))^{-n}.
inline BigFloat alternating_sum(const std::function<BigFloat(long, long)>& term, long precision) {
    const long wp = precision + 2 * kGuardBits;
    // log2(3+sqrt(8)) = 2.5431...
    const long n = static_cast<long>(std::ceil((precision + kGuardBits) / 2.5431)) + 1;
    BigFloat d(1, wp);
    {
        BigFloat base(3, wp);
        BigFloat sqrt8(wp);
        mpfr_sqrt_ui(sqrt8.raw_mut(), 8, MPFR_RNDN);
        base = base + sqrt8;
        mpfr_pow_si(d.raw_mut(), base.raw(), n, MPFR_RNDN);
    }
    d = (d + BigFloat(1, wp) / d).ldexp(-1);
    BigFloat b(-1, wp);
    BigFloat c = d.neg();
    BigFloat acc(wp);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        acc = acc + c * term(k, wp);
        b = b * BigFloat(rational(2 * (k + n) * (k - n), (2 * k + 1) * (k + 1)), wp);
    }
    return (acc / d).round_to(precision);
}

} // namespace detail

inline BigFloat zeta_em(const BigFloat& s, long precision) {
    if (s <= BigFloat(1, s.precision())) throw std::domain_error("zeta_em: requires s > 1");
    // zeta(s) = zeta(s, 1)
    return detail::hurwitz_euler_maclaurin(s, BigFloat(1, precision + kGuardBits), precision);
}

inline BigFloat hurwitz_em(const BigFloat& s, const BigFloat& a, long precision) {
    if (s <= BigFloat(1, s.precision())) throw std::domain_error("hurwitz_em: requires s > 1");
    if (a.sign() <= 0) throw std::domain_error("hurwitz_em: requires a > 0");
    return detail::hurwitz_euler_maclaurin(s, a, precision);
}

// Dirichlet eta(s) = sum_{n>=1} (-1)^{n-1} n^{-s}, s > 0.
inline BigFloat eta_accel(const BigFloat& s, long precision) {
    if (s.sign() <= 0) throw std::domain_error("eta_accel: requires s > 0");
    return detail::alternating_sum(
        [&s](long k, long wp) { return pow_real(BigFloat(k + 1, wp), s.round_to(wp).neg(), wp); },
        precision);
}

// zeta_E(s) = 2 sum_{n>=1} (-1)^n n^{-s} = -2 eta(s).
inline BigFloat euler_zeta_eval(const BigFloat& s, long precision) {
    return eta_accel(s, precision).ldexp(1).neg();
}

// zeta_E(s, x) = 2 sum_{n>=0} (-1)^n (n+x)^{-s}, s > 0, x > 0.
inline BigFloat hurwitz_euler_eval(const BigFloat& s, const BigFloat& x, long precision) {
    if (s.sign() <= 0) throw std::domain_error("hurwitz_euler_eval: requires s > 0");
    if (x.sign() <= 0) throw std::domain_error("hurwitz_euler_eval: requires x > 0");
    return detail::alternating_sum(
                [&](long k, long wp) {
                    return pow_real(BigFloat(k, wp) + x.round_to(wp), s.round_to(wp).neg(), wp);
                },
                precision)
        .ldexp(1);
}

// beta(s) = sum_{k>=0} (-1)^k (2k+1)^{-s}, s > 0.
inline BigFloat dirichlet_beta_eval(const BigFloat& s, long precision) {
    if (s.sign() <= 0) throw std::domain_error("dirichlet_beta_eval: requires s > 0");
    return detail::alternating_sum(
        [&s](long k, long wp) {
            return pow_real(BigFloat(2 * k + 1, wp), s.round_to(wp).neg(), wp);
        },
        precision);
}

} // namespace ezeta

#endif
