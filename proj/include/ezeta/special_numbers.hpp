#ifndef EZETA_SPECIAL_NUMBERS_HPP
#define EZETA_SPECIAL_NUMBERS_HPP

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "ezeta/rational.hpp"

namespace ezeta {

namespace detail {

// Incrementally grown, mutex-guarded tables. Lookups copy the value out, so
// readers never hold references into a vector that may reallocate.
class MemoTable {
public:
    template <typename Extend>
    Rational get(std::size_t n, Extend extend) {
        std::lock_guard<std::mutex> lock(mu_);
        while (values_.size() <= n) extend(values_);
        return values_[n];
    }

private:
    std::mutex mu_;
    std::vector<Rational> values_;
};

inline MemoTable& bernoulli_table() {
    static MemoTable t;
    return t;
}

inline MemoTable& euler_first_table() {
    static MemoTable t;
    return t;
}

inline MemoTable& euler_second_table() {
    static MemoTable t;
    return t;
}

} // namespace detail

// Bernoulli numbers from sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1 (the
// t/(e^t - 1) convention, so B_1 = -1/2).
inline Rational bernoulli(std::size_t n) {
    return detail::bernoulli_table().get(n, [](std::vector<Rational>& v) {
        std::size_t m = v.size();
        if (m == 0) {
            v.emplace_back(1);
            return;
        }
        Rational acc = 0;
        for (std::size_t k = 0; k < m; ++k) acc += Rational(binomial(m + 1, static_cast<long>(k))) * v[k];
        v.push_back(-acc / Rational(static_cast<long>(m + 1)));
    });
}

// First kind Euler numbers E_n^* (coefficients of 2/(e^t + 1)):
// E_0^* = 1, E_n^* = -(1/2) sum_{l<n} C(n,l) E_l^*.
inline Rational euler_first(std::size_t n) {
    return detail::euler_first_table().get(n, [](std::vector<Rational>& v) {
        std::size_t m = v.size();
        if (m == 0) {
            v.emplace_back(1);
            return;
        }
        Rational acc = 0;
        for (std::size_t l = 0; l < m; ++l) acc += Rational(binomial(m, static_cast<long>(l))) * v[l];
        v.push_back(-acc / 2);
    });
}

// Second kind Euler numbers E_n (coefficients of sech t): odd ones vanish,
// E_{2n} = -sum_{k<n} C(2n,2k) E_{2k}. Integer-valued.
inline Rational euler_second(std::size_t n) {
    return detail::euler_second_table().get(n, [](std::vector<Rational>& v) {
        std::size_t m = v.size();
        if (m == 0) {
            v.emplace_back(1);
            return;
        }
        if (m % 2 == 1) {
            v.emplace_back(0);
            return;
        }
        Rational acc = 0;
        for (std::size_t k = 0; k < m / 2; ++k)
            acc += Rational(binomial(m, static_cast<long>(2 * k))) * v[2 * k];
        v.push_back(-acc);
    });
}

// Euler polynomial E_n^*(x) = sum_k C(n,k) E_k^* x^{n-k}.
inline Rational euler_poly(std::size_t n, const Rational& x) {
    Rational acc = 0;
    Rational xpow = 1; // x^{n-k}, built from the top
    for (std::size_t k = n + 1; k-- > 0;) {
        acc += Rational(binomial(n, static_cast<long>(k))) * euler_first(k) * xpow;
        xpow *= x;
    }
    return acc;
}

// 2 * sum_{l=0}^{n-1} (-1)^l l^k, with 0^0 = 1.
inline Rational alt_power_sum(std::size_t n, std::size_t k) {
    if (n == 0) throw std::invalid_argument("alt_power_sum: n must be positive");
    Int acc = 0;
    for (std::size_t l = 0; l < n; ++l) {
        Int term = (l == 0 && k == 0) ? Int(1) : pow_int(static_cast<long>(l), k);
        acc += (l % 2 == 0) ? term : -term;
    }
    return Rational(2 * acc);
}

// sum_l C(k,l) 2^l E_l^*; equals euler_second(k).
inline Rational second_from_first(std::size_t k) {
    Rational acc = 0;
    Int p2 = 1;
    for (std::size_t l = 0; l <= k; ++l) {
        acc += Rational(binomial(k, static_cast<long>(l)) * p2) * euler_first(l);
        p2 *= 2;
    }
    return acc;
}

enum class NumberKind { B, E_star, E_second };

struct NumberTable {
    NumberKind kind;
    std::vector<Rational> values; // indexed from 0
    std::size_t max_index;
};

inline NumberTable number_table(NumberKind kind, std::size_t max_index) {
    NumberTable t{kind, {}, max_index};
    t.values.reserve(max_index + 1);
    for (std::size_t n = 0; n <= max_index; ++n) {
        switch (kind) {
            case NumberKind::B: t.values.push_back(bernoulli(n)); break;
            case NumberKind::E_star: t.values.push_back(euler_first(n)); break;
            case NumberKind::E_second: t.values.push_back(euler_second(n)); break;
        }
    }
    return t;
}

} // namespace ezeta

#endif
