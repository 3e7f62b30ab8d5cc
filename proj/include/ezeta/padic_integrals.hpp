#ifndef EZETA_PADIC_INTEGRALS_HPP
#define EZETA_PADIC_INTEGRALS_HPP

#include <stdexcept>

#include "ezeta/padic.hpp"
#include "ezeta/rational.hpp"
#include "ezeta/special_numbers.hpp"

namespace ezeta {

// sum_{x=0}^{p^N - 1} (x + shift)^n (-1)^x, exact.
inline Int fermionic_sum_exact(std::size_t n, long p, long depth, long shift = 0) {
    Int count = pow_int(p, static_cast<unsigned long>(depth));
    Int acc = 0;
    for (Int x = 0; x < count; ++x) {
        Int base = x + shift;
        Int term;
        if (base == 0 && n == 0)
            term = 1;
        else
            mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), n);
        if (mpz_odd_p(x.get_mpz_t()))
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// Finite-level fermionic integral moment: sum_{x<p^N} x^n (-1)^x mod p^N.
// Converges p-adically to E_n^*.
inline PadicInt fermionic_sum(std::size_t n, long p, long depth) {
    return PadicInt(p, depth, fermionic_sum_exact(n, p, depth));
}

struct VolkenbornResult {
    Rational exact;    // (1/p^N) sum_{x<p^N} x^n, exact
    PadicInt reduced;  // p^scale * exact reduced mod p^{N - scale}
    long scale;        // p-power cleared from the denominator
};

// Finite-level Volkenborn (bosonic) integral moment. The averaged sum is
// computed in exact rationals; the p-part of its denominator (at most one
// power from the Bernoulli tail) is cleared before reduction, shrinking the
// reported depth accordingly.
inline VolkenbornResult volkenborn_sum(std::size_t n, long p, long depth) {
    Int count = pow_int(p, static_cast<unsigned long>(depth));
    Int acc = 0;
    for (Int x = 0; x < count; ++x) {
        Int term;
        if (x == 0 && n == 0)
            term = 1;
        else
            mpz_pow_ui(term.get_mpz_t(), x.get_mpz_t(), n);
        acc += term;
    }
    Rational exact = rational(acc, count);
    long scale = 0;
    Int den = exact.get_den();
    while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(p));
        ++scale;
    }
    if (scale >= depth)
        throw std::domain_error("volkenborn_sum: depth insufficient for denominator p-power");
    Rational scaled = exact * Rational(pow_int(p, static_cast<unsigned long>(scale)));
    return {exact, padic_of_rational(scaled, p, depth - scale), scale};
}

struct ShiftCheckResult {
    bool ok = false;        // sides agree mod p^N
    Valuation difference;   // v_p(lhs - rhs)
};

// Iteration-consistent m-shift identity for the fermionic integral:
//   sum (x+m)^n (-1)^x  ==  (-1)^m sum x^n (-1)^x + 2 sum_{l<m} (-1)^{m-1-l} l^n
// as a congruence mod p^N.
inline ShiftCheckResult fermionic_shift_check(std::size_t n, long shift, long p, long depth) {
    if (shift < 1) throw std::invalid_argument("fermionic_shift_check: shift must be positive");
    Int lhs = fermionic_sum_exact(n, p, depth, shift);
    Int rhs = fermionic_sum_exact(n, p, depth);
    if (shift % 2 == 1) rhs = -rhs;
    for (long l = 0; l < shift; ++l) {
        Int t = (l == 0 && n == 0) ? Int(1) : pow_int(l, n);
        rhs += ((shift - 1 - l) % 2 == 0) ? 2 * t : -2 * t;
    }
    PadicInt diff(p, depth, lhs - rhs);
    return {diff.residue() == 0, diff.valuation()};
}

// [x]_{-q} = (1 - (-q)^x) / (1 + q), exact in q.
inline Rational q_bracket_neg(const Rational& q, unsigned long x) {
    if (q == -1) throw std::domain_error("q_bracket_neg: q = -1 is singular");
    return (Rational(1) - pow_rational(-q, static_cast<long>(x))) / (Rational(1) + q);
}

// Kubota-Leopoldt refinement relation for mu_{-q}: the measure of a ball at
// level N equals the sum of the measures of its p children at level N+1,
// verified exactly in Rational.
inline bool mu_minus_q_distribution_check(unsigned long a, unsigned long d, long p, long depth,
                                          const Rational& q) {
    if (d % 2 == 0) throw std::invalid_argument("mu_minus_q_distribution_check: d must be odd");
    if (gcd(Int(d), Int(p)) != 1)
        throw std::invalid_argument("mu_minus_q_distribution_check: d must be coprime to p");
    if (q == 1 || q == -1)
        throw std::domain_error("mu_minus_q_distribution_check: q = +-1 is singular");
    unsigned long dpn = d * static_cast<unsigned long>(
                                pow_int(p, static_cast<unsigned long>(depth)).get_ui());
    if (a >= dpn) throw std::invalid_argument("mu_minus_q_distribution_check: a out of range");
    Rational parent = pow_rational(-q, static_cast<long>(a)) / q_bracket_neg(q, dpn);
    Rational children = 0;
    Rational denom = q_bracket_neg(q, dpn * static_cast<unsigned long>(p));
    for (long i = 0; i < p; ++i)
        children += pow_rational(-q, static_cast<long>(a + static_cast<unsigned long>(i) * dpn)) / denom;
    return parent == children;
}

} // namespace ezeta

#endif
