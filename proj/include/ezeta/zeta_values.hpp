#ifndef EZETA_ZETA_VALUES_HPP
#define EZETA_ZETA_VALUES_HPP

#include <cstddef>
#include <string>
#include <utility>

#include "ezeta/bigfloat.hpp"
#include "ezeta/rational.hpp"
#include "ezeta/series_eval.hpp"
#include "ezeta/special_numbers.hpp"

namespace ezeta {

// Exact value coeff * pi^power. Equality is componentwise; these are never
// compared through numeric evaluation.
struct PiMultiple {
    Rational coeff;
    unsigned power = 0;

    friend bool operator==(const PiMultiple& a, const PiMultiple& b) {
        return a.power == b.power && a.coeff == b.coeff;
    }

    std::string str() const { return to_string(coeff) + " * pi^" + std::to_string(power); }

    BigFloat eval(long precision) const {
        const long wp = precision + kGuardBits;
        BigFloat p = pi(wp);
        BigFloat acc(Rational(coeff), wp);
        for (unsigned i = 0; i < power; ++i) acc = acc * p;
        return acc.round_to(precision);
    }
};

namespace detail {
inline Rational sign_pow(std::size_t n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }
} // namespace detail

// zeta(2n) = (-1)^{n-1} (2 pi)^{2n} B_{2n} / (2 (2n)!)
inline PiMultiple zeta_even(std::size_t n) {
    Rational c = detail::sign_pow(n - 1) * Rational(two_pow(2 * n)) * bernoulli(2 * n) /
                 Rational(2 * factorial(2 * n));
    return {c, static_cast<unsigned>(2 * n)};
}

// zeta(2n) = (-1)^{n-1} (2 pi)^{2n} E_{2n-1}^* / (4 (2n-1)! (1 - 4^n))
inline PiMultiple zeta_even_via_euler(std::size_t n) {
    Rational den = Rational(4 * factorial(2 * n - 1)) * (Rational(1) - Rational(two_pow(2 * n)));
    Rational c = detail::sign_pow(n - 1) * Rational(two_pow(2 * n)) * euler_first(2 * n - 1) / den;
    return {c, static_cast<unsigned>(2 * n)};
}

// zeta(-n) = -B_{n+1}/(n+1)
inline Rational zeta_neg(std::size_t n) {
    return -bernoulli(n + 1) / Rational(static_cast<long>(n + 1));
}

// beta(2n+1) = (-1)^n E_{2n} pi^{2n+1} / (2 (2n)! 2^{2n+1}); valid at n = 0
// as well (the Leibniz series).
inline PiMultiple beta_odd(std::size_t n) {
    Rational c = detail::sign_pow(n) * euler_second(2 * n) /
                 Rational(2 * factorial(2 * n) * two_pow(2 * n + 1));
    return {c, static_cast<unsigned>(2 * n + 1)};
}

// lambda(2n) = sum over odd m >= 1 of m^{-2n}
//            = (-1)^n (2 pi)^{2n} E_{2n-1}^* / (4^{n+1} (2n-1)!)
inline PiMultiple lambda_even(std::size_t n) {
    Rational c = detail::sign_pow(n) * Rational(two_pow(2 * n)) * euler_first(2 * n - 1) /
                 Rational(two_pow(2 * n + 2) * factorial(2 * n - 1));
    return {c, static_cast<unsigned>(2 * n)};
}

// zeta_E(2n) = (-1)^{n-1} pi^{2n} (2 - 4^n) E_{2n-1}^* / (2 (2n-1)! (1 - 4^n))
inline PiMultiple euler_zeta_even(std::size_t n) {
    Rational num = detail::sign_pow(n - 1) * (Rational(2) - Rational(two_pow(2 * n))) *
                   euler_first(2 * n - 1);
    Rational den = Rational(2 * factorial(2 * n - 1)) * (Rational(1) - Rational(two_pow(2 * n)));
    return {num / den, static_cast<unsigned>(2 * n)};
}

// zeta_E(-k) = E_k^* through the Bernoulli chain 2 (1 - 2^{k+1}) B_{k+1}/(k+1).
inline Rational euler_zeta_neg(std::size_t k) {
    return Rational(2) * (Rational(1) - Rational(two_pow(k + 1))) * bernoulli(k + 1) /
           Rational(static_cast<long>(k + 1));
}

// Bernoulli-form closed value of sum_{n>=1} (-1)^n (2n-1)^{-(2k+1)}, which
// equals -beta(2k+1).
inline PiMultiple eq20_alt_odd_sum(std::size_t k) {
    Rational acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
        Rational num = (Rational(two_pow(2 * k - 2 * j)) - 2) * bernoulli(2 * k - 2 * j);
        Rational den = Rational(factorial(2 * j + 1) * factorial(2 * k - 2 * j) * two_pow(2 * j + 2));
        acc += num / den;
    }
    acc -= Rational(1) / Rational(factorial(2 * k + 1) * two_pow(2 * k + 2));
    return {detail::sign_pow(k) * acc, static_cast<unsigned>(2 * k + 1)};
}

// Both sides of the closing Bernoulli-Euler identity, exactly.
inline std::pair<Rational, Rational> mixed_identity_eq21(std::size_t k) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < k; ++j) {
        Rational num = Rational(two_pow(2 * k - 2 * j)) - 2;
        Rational den = Rational(factorial(2 * j + 1) * factorial(2 * k - 2 * j) * two_pow(2 * j + 2));
        lhs += num * bernoulli(2 * k - 2 * j) / den;
    }
    Rational rhs = Rational(1) / Rational(factorial(2 * k + 1) * two_pow(2 * k + 2)) -
                   euler_second(2 * k) / Rational(two_pow(2 * k + 2) * factorial(2 * k));
    return {lhs, rhs};
}

// Numeric residual of the odd-zeta relation
//   zeta(2n+1, 1/4) + 2^{2n} (1 - 2^{2n+1}) zeta(2n+1)
//     = (-1)^n E_{2n} pi^{2n+1} 2^{2n} / (2 (2n)!).
// zeta(2n+1) has no closed form, so this one is checked numerically.
inline BigFloat corollary2_residual(std::size_t n, long precision) {
    if (precision < 64) throw std::invalid_argument("corollary2_residual: precision must be >= 64");
    const long wp = precision + kGuardBits;
    BigFloat s(Rational(static_cast<long>(2 * n + 1)), wp);
    BigFloat lhs = hurwitz_em(s, BigFloat(rational(1, 4), wp), wp);
    Rational factor = Rational(two_pow(2 * n)) * (Rational(1) - Rational(two_pow(2 * n + 1)));
    lhs = lhs + BigFloat(factor, wp) * zeta_em(s, wp);
    PiMultiple rhs{detail::sign_pow(n) * euler_second(2 * n) * Rational(two_pow(2 * n)) /
                       Rational(2 * factorial(2 * n)),
                   static_cast<unsigned>(2 * n + 1)};
    return abs_diff(lhs, rhs.eval(wp)).round_to(precision);
}

} // namespace ezeta

#endif
