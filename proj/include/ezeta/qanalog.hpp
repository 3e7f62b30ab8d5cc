#ifndef EZETA_QANALOG_HPP
#define EZETA_QANALOG_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "ezeta/bigfloat.hpp"
#include "ezeta/padic.hpp"
#include "ezeta/rational.hpp"
#include "ezeta/special_numbers.hpp"

namespace ezeta {

// [x]_q = (1 - q^x)/(1 - q), exact in q.
inline Rational q_bracket(const Rational& q, long x) {
    if (q == 1) throw std::domain_error("q_bracket: q = 1 is singular");
    return (Rational(1) - pow_rational(q, x)) / (Rational(1) - q);
}

// Carlitz q-Bernoulli number beta_{m,q} in real mode, from the closed form
//   (1/(1-q)^m) [ (q-1)/log q + sum_{i=1}^m C(m,i) (-1)^i i/[i]_q ],
// the signed expansion the defining q-integral limit actually produces.
// Recovers B_m as q -> 1.
inline BigFloat carlitz_q_bernoulli(std::size_t m, const Rational& q, long precision) {
    if (q <= 0 || q == 1)
        throw std::domain_error("carlitz_q_bernoulli: q must be in (0,1) or (1,inf)");
    const long wp = precision + kGuardBits;
    Rational tail = 0;
    for (std::size_t i = 1; i <= m; ++i) {
        Rational bq = q_bracket(q, static_cast<long>(i));
        if (bq == 0) throw std::domain_error("carlitz_q_bernoulli: [i]_q vanishes");
        Rational term = Rational(binomial(m, static_cast<long>(i))) *
                        Rational(static_cast<long>(i)) / bq;
        tail += (i % 2 == 0) ? term : -term;
    }
    BigFloat qf(q, wp);
    BigFloat bracket = (qf - BigFloat(1, wp)) / log(qf, wp) + BigFloat(tail, wp);
    Rational scale = pow_rational(Rational(1) - q, static_cast<long>(m));
    return (bracket / BigFloat(scale, wp)).round_to(precision);
}

// Same closed form in p-adic mode for |1-q|_p < 1, with the Iwasawa log.
// Every division is valuation-aware, so the result's depth reflects the
// precision actually available.
inline PadicInt carlitz_q_bernoulli_padic(std::size_t m, const PadicInt& q) {
    long p = q.prime();
    long depth = q.depth();
    PadicInt one(p, depth, 1);
    PadicInt qm1 = q - one;
    Valuation v = qm1.valuation();
    if (!v.at_least && v.value < 1)
        throw std::domain_error("carlitz_q_bernoulli_padic: requires q = 1 mod p");
    PadicInt bracket = divide(qm1, padic_log(q, depth));
    for (std::size_t i = 1; i <= m; ++i) {
        // [i]_q = 1 + q + ... + q^{i-1}
        PadicInt bq(p, depth, 0);
        for (std::size_t j = 0; j < i; ++j) bq = bq + q.pow(j);
        PadicInt term = divide(PadicInt(p, depth, Int(static_cast<long>(i)) *
                                                      binomial(m, static_cast<long>(i))),
                               bq);
        bracket = (i % 2 == 0) ? bracket + term : bracket - term;
    }
    PadicInt scale = (one - q).pow(static_cast<unsigned long>(m));
    if (m == 0) return bracket;
    return divide(bracket, scale);
}

// Finite-level bosonic q-integral moment (1/[p^N]_q) sum_{x<p^N} [x]_q^m,
// evaluated mod p^{N + m + guard} so the division by [p^N]_q (valuation N)
// still leaves usable depth. Converges p-adically to beta_{m,q}.
inline PadicInt q_bosonic_sum(std::size_t m, long p, long level, const Rational& q,
                              long guard = 8) {
    if (level < 1) throw std::invalid_argument("q_bosonic_sum: level must be positive");
    long work = level + static_cast<long>(m) + guard;
    PadicInt qp = padic_of_rational(q, p, work);
    Valuation v = (qp - PadicInt(p, work, 1)).valuation();
    if (!v.at_least && v.value < 1)
        throw std::domain_error("q_bosonic_sum: requires q = 1 mod p");
    Int terms = pow_int(p, static_cast<unsigned long>(level));
    PadicInt qx(p, work, 1);      // q^x
    PadicInt bracket(p, work, 0); // [x]_q
    PadicInt acc(p, work, 0);
    for (Int x = 0; x < terms; ++x) {
        acc = acc + bracket.pow(static_cast<unsigned long>(m));
        bracket = bracket + qx;
        qx = qx * qp;
    }
    // after the loop, bracket = [p^N]_q with valuation exactly N
    return divide(acc, bracket);
}

struct QZetaDiagnostic {
    BigFloat zeta_value;  // zeta_q(1-k) per the displayed definition
    BigFloat beta_term;   // beta_{k,q}/k
    BigFloat residual;    // |zeta_q(1-k) + beta_{k,q}/k|
};

// zeta_q(s) = sum_{n>=1} q^n/[n]_q^s - (1/(s-1)) (1-q)^s / log q at s = 1-k.
// The advertised relation zeta_q(1-k) = -beta_{k,q}/k does not hold under
// these normalizations; the residual is reported as a diagnostic, never
// asserted to vanish.
inline QZetaDiagnostic q_zeta_residual(std::size_t k, const Rational& q, long precision) {
    if (k < 1) throw std::invalid_argument("q_zeta_residual: k must be positive");
    if (q <= 0 || q >= 1) throw std::domain_error("q_zeta_residual: q must be in (0,1)");
    const long wp = precision + kGuardBits;
    // terms decay like q^n; sum until they drop below 2^-(precision+16)
    double log2q = std::log2(q.get_d());
    long nmax = static_cast<long>(std::ceil((precision + 2 * kGuardBits) / -log2q)) + 4;
    BigFloat series(wp);
    Rational qn = 1;
    for (long n = 1; n <= nmax; ++n) {
        qn *= q;
        series = series + BigFloat(qn * pow_rational(q_bracket(q, n), static_cast<long>(k) - 1), wp);
    }
    BigFloat qf(q, wp);
    Rational one_minus_q_pow = pow_rational(Rational(1) - q, 1 - static_cast<long>(k));
    BigFloat correction = BigFloat(one_minus_q_pow, wp) /
                          (BigFloat(static_cast<long>(k), wp) * log(qf, wp));
    BigFloat zq = series + correction;
    BigFloat beta_term =
        carlitz_q_bernoulli(k, q, wp) / BigFloat(static_cast<long>(k), wp);
    return {zq.round_to(precision), beta_term.round_to(precision),
            (zq + beta_term).abs().round_to(precision)};
}

} // namespace ezeta

#endif
