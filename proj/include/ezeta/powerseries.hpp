#ifndef EZETA_POWERSERIES_HPP
#define EZETA_POWERSERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ezeta/rational.hpp"

namespace ezeta {

// Formal power series over Rational, truncated after degree `order`
// (coefficients 0..order are kept). All arithmetic is exact.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}

    TruncatedSeries(std::vector<Rational> coeffs, std::size_t order) : c_(std::move(coeffs)) {
        c_.resize(order + 1);
    }

    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return c_.at(i); }
    void set(std::size_t i, Rational v) { c_.at(i) = std::move(v); }
    const std::vector<Rational>& coefficients() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    // Cauchy product truncated at order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    // q with q*b = a up to truncation; requires b[0] != 0.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        if (b.c_[0] == 0)
            throw std::domain_error("TruncatedSeries: division by series with zero constant term");
        TruncatedSeries q(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n) {
            Rational acc = a.c_[n];
            for (std::size_t k = 0; k < n; ++k) acc -= q.c_[k] * b.c_[n - k];
            q.c_[n] = acc / b.c_[0];
        }
        return q;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries r(order);
        r.c_[0] = 1;
        return r;
    }

    // exp(scale * t): coefficients scale^n / n!.
    static TruncatedSeries exp_series(std::size_t order, const Rational& scale = 1) {
        TruncatedSeries r(order);
        Rational c = 1;
        r.c_[0] = 1;
        for (std::size_t n = 1; n <= order; ++n) {
            c *= scale;
            c /= static_cast<long>(n);
            r.c_[n] = c;
        }
        return r;
    }

    // cos(scale * t) and sin(scale * t)/(scale * t), both even-power ladders.
    static TruncatedSeries cos_series(std::size_t order, const Rational& scale = 1) {
        TruncatedSeries r(order);
        Rational s2 = scale * scale;
        Rational c = 1;
        r.c_[0] = 1;
        for (std::size_t n = 2; n <= order; n += 2) {
            c *= -s2;
            c /= static_cast<long>((n - 1) * n);
            r.c_[n] = c;
        }
        return r;
    }

    static TruncatedSeries sinc_series(std::size_t order, const Rational& scale = 1) {
        TruncatedSeries r(order);
        Rational s2 = scale * scale;
        Rational c = 1;
        r.c_[0] = 1;
        for (std::size_t n = 2; n <= order; n += 2) {
            c *= -s2;
            c /= static_cast<long>(n * (n + 1));
            r.c_[n] = c;
        }
        return r;
    }

private:
    static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("TruncatedSeries: order mismatch");
    }

    std::vector<Rational> c_;
};

enum class GfKind { bernoulli, euler_first, euler_first_poly, euler_second, sec, tan, x_cot_x };

// Number sequences and classical series straight from their generating
// functions. For bernoulli / euler_* kinds the result is n!-scaled (the
// number sequence itself); sec / tan / x_cot_x return raw coefficients.
// Generating functions with a removable singularity at t = 0 have the
// explicit factor of t cancelled before dividing.
inline std::vector<Rational> gf_coefficients(GfKind kind, std::size_t order,
                                             const Rational& x = Rational(0)) {
    if (order < 1) throw std::invalid_argument("gf_coefficients: order must be >= 1");
    TruncatedSeries result(order);
    bool scaled = true;
    switch (kind) {
        case GfKind::bernoulli: {
            // t/(e^t - 1): cancel t, divide 1 by sum_{n>=0} t^n/(n+1)!.
            TruncatedSeries den(order);
            Rational c = 1;
            den.set(0, 1);
            for (std::size_t n = 1; n <= order; ++n) {
                c /= static_cast<long>(n + 1);
                den.set(n, c);
            }
            result = TruncatedSeries::one(order) / den;
            break;
        }
        case GfKind::euler_first: {
            TruncatedSeries den = TruncatedSeries::exp_series(order);
            den.set(0, den[0] + 1);
            TruncatedSeries num(order);
            num.set(0, 2);
            result = num / den;
            break;
        }
        case GfKind::euler_first_poly: {
            // 2 e^{xt} / (e^t + 1)
            TruncatedSeries den = TruncatedSeries::exp_series(order);
            den.set(0, den[0] + 1);
            TruncatedSeries num = TruncatedSeries::exp_series(order, x);
            TruncatedSeries two(order);
            two.set(0, 2);
            result = (two * num) / den;
            break;
        }
        case GfKind::euler_second: {
            // 2 e^t / (e^{2t} + 1)
            TruncatedSeries den = TruncatedSeries::exp_series(order, 2);
            den.set(0, den[0] + 1);
            TruncatedSeries num = TruncatedSeries::exp_series(order);
            TruncatedSeries two(order);
            two.set(0, 2);
            result = (two * num) / den;
            break;
        }
        case GfKind::sec: {
            result = TruncatedSeries::one(order) / TruncatedSeries::cos_series(order);
            scaled = false;
            break;
        }
        case GfKind::tan: {
            // sin t / cos t with the shared factor t cancelled from sin only:
            // tan = t * (sin t / t) / cos t.
            TruncatedSeries q = TruncatedSeries::sinc_series(order) / TruncatedSeries::cos_series(order);
            for (std::size_t n = order; n >= 1; --n) result.set(n, q[n - 1]);
            result.set(0, 0);
            scaled = false;
            break;
        }
        case GfKind::x_cot_x: {
            // x cot x = cos x / (sin x / x)
            result = TruncatedSeries::cos_series(order) / TruncatedSeries::sinc_series(order);
            scaled = false;
            break;
        }
        default:
            throw std::invalid_argument("gf_coefficients: unknown kind");
    }
    std::vector<Rational> out(order + 1);
    Int fact = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) fact *= static_cast<long>(n);
        out[n] = scaled ? Rational(result[n] * Rational(fact)) : result[n];
        out[n].canonicalize();
    }
    return out;
}

} // namespace ezeta

#endif
