#ifndef EZETA_PADIC_HPP
#define EZETA_PADIC_HPP

#include <stdexcept>
#include <string>

#include "ezeta/rational.hpp"

namespace ezeta {

struct Valuation {
    long value = 0;
    bool at_least = false; // residue was 0, true valuation may exceed `value`
};

// Residue mod p^N for an odd prime p. Arithmetic is exact mod p^N; mixing
// different primes is a usage error, mixing depths narrows to the smaller.
class PadicInt {
public:
    PadicInt(long p, long depth, const Int& value) : p_(check_prime(p)), depth_(check_depth(depth)) {
        modulus_ = pow_int(p_, static_cast<unsigned long>(depth_));
        mpz_mod(r_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
    }

    long prime() const { return p_; }
    long depth() const { return depth_; }
    const Int& residue() const { return r_; }
    const Int& modulus() const { return modulus_; }

    Valuation valuation() const {
        if (r_ == 0) return {depth_, true};
        long v = 0;
        Int n = r_;
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p_))) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p_));
            ++v;
        }
        return {v, false};
    }

    bool is_unit() const { return !mpz_divisible_ui_p(r_.get_mpz_t(), static_cast<unsigned long>(p_)); }

    PadicInt reduce(long depth) const { return PadicInt(p_, depth, r_); }

    friend PadicInt operator+(const PadicInt& a, const PadicInt& b) {
        long d = common_depth(a, b);
        return PadicInt(a.p_, d, a.r_ + b.r_);
    }
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b) {
        long d = common_depth(a, b);
        return PadicInt(a.p_, d, a.r_ - b.r_);
    }
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b) {
        long d = common_depth(a, b);
        return PadicInt(a.p_, d, a.r_ * b.r_);
    }
    friend bool operator==(const PadicInt& a, const PadicInt& b) {
        return a.p_ == b.p_ && a.depth_ == b.depth_ && a.r_ == b.r_;
    }

    PadicInt inverse() const {
        if (!is_unit()) throw std::domain_error("PadicInt: inverse of a non-unit");
        Int inv;
        mpz_invert(inv.get_mpz_t(), r_.get_mpz_t(), modulus_.get_mpz_t());
        return PadicInt(p_, depth_, inv);
    }

    // a / b for v(b) <= v(a); the result lives at depth - v(b).
    friend PadicInt divide(const PadicInt& a, const PadicInt& b) {
        long d = common_depth(a, b);
        Valuation vb = b.valuation();
        if (vb.at_least) throw std::domain_error("PadicInt: division by (numerically) zero");
        Valuation va = a.valuation();
        if (!va.at_least && va.value < vb.value)
            throw std::domain_error("PadicInt: division would leave p-adic integers");
        if (d - vb.value < 1) throw std::domain_error("PadicInt: depth exhausted in division");
        Int pa = pow_int(a.p_, static_cast<unsigned long>(vb.value));
        PadicInt num(a.p_, d - vb.value, a.r_ / pa);
        PadicInt den(a.p_, d - vb.value, b.r_ / pa);
        return num * den.inverse();
    }

    PadicInt pow(unsigned long e) const {
        Int r;
        mpz_powm_ui(r.get_mpz_t(), r_.get_mpz_t(), e, modulus_.get_mpz_t());
        return PadicInt(p_, depth_, r);
    }

    std::string str() const {
        return r_.get_str() + " mod " + std::to_string(p_) + "^" + std::to_string(depth_);
    }

private:
    static long check_prime(long p) {
        if (p < 3 || p % 2 == 0 || mpz_probab_prime_p(Int(p).get_mpz_t(), 40) == 0)
            throw std::invalid_argument("PadicInt: p must be an odd prime");
        return p;
    }
    static long check_depth(long depth) {
        if (depth < 1) throw std::invalid_argument("PadicInt: depth must be positive");
        return depth;
    }
    static long common_depth(const PadicInt& a, const PadicInt& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("PadicInt: prime mismatch");
        return std::min(a.depth_, b.depth_);
    }

    long p_;
    long depth_;
    Int r_;
    Int modulus_;
};

// The residue mod p^N congruent to r; requires den(r) coprime to p.
inline PadicInt padic_of_rational(const Rational& r, long p, long depth) {
    PadicInt den(p, depth, r.get_den());
    if (!den.is_unit())
        throw std::domain_error("padic_of_rational: denominator divisible by p");
    PadicInt num(p, depth, r.get_num());
    return num * den.inverse();
}

// Iwasawa logarithm of u = 1 (mod p): sum_k (-1)^{k+1} (u-1)^k / k, summed in
// exact rationals until the terms vanish mod p^N (the k in the denominator
// can eat valuation, so the stop test accounts for it).
inline PadicInt padic_log(const PadicInt& u, long depth) {
    long p = u.prime();
    if (depth > u.depth()) throw std::invalid_argument("padic_log: depth exceeds input depth");
    Int t = u.residue() - 1;
    if (t != 0 && !mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("padic_log: argument must be 1 mod p");
    if (t == 0) return PadicInt(p, depth, 0);
    // v_p(t^k / k) >= k - v_p(k) >= k - log_p(k); sum far enough that every
    // later term vanishes mod p^depth (k - log_p k is increasing for p >= 3).
    long last = depth;
    while (true) {
        long lg = 0, kk = last;
        while (kk >= p) { kk /= p; ++lg; }
        if (last - lg - 1 >= depth) break;
        ++last;
    }
    Rational acc = 0;
    Int tk = 1;
    for (long k = 1; k <= last; ++k) {
        tk *= t;
        Rational term = rational(tk, Int(k));
        acc += (k % 2 == 1) ? term : -term;
    }
    return padic_of_rational(acc, p, depth);
}

} // namespace ezeta

#endif
