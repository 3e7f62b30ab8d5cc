#include <catch_amalgamated.hpp>

#include "ezeta/powerseries.hpp"
#include "ezeta/special_numbers.hpp"

using namespace ezeta;

namespace {
TruncatedSeries geometric(std::size_t order) {
    TruncatedSeries g(order);
    for (std::size_t i = 0; i <= order; ++i) g.set(i, 1);
    return g;
}
} // namespace

TEST_CASE("series addition, multiplication, identities") {
    TruncatedSeries one = TruncatedSeries::one(4);
    TruncatedSeries a(4);
    a.set(0, 1);
    a.set(1, rational(-2, 3));
    a.set(3, 5);
    REQUIRE(a * one == a);
    REQUIRE(a + TruncatedSeries(4) == a);

    // (1 + t)(1 - t) = 1 - t^2
    TruncatedSeries p(4), m(4), expect(4);
    p.set(0, 1);
    p.set(1, 1);
    m.set(0, 1);
    m.set(1, -1);
    expect.set(0, 1);
    expect.set(2, -1);
    REQUIRE(p * m == expect);

    // e^t * e^{-t} = 1
    REQUIRE(TruncatedSeries::exp_series(12) * TruncatedSeries::exp_series(12, -1) ==
            TruncatedSeries::one(12));

    REQUIRE_THROWS_AS(a + TruncatedSeries(5), std::invalid_argument);
}

TEST_CASE("series division") {
    TruncatedSeries a(6);
    a.set(0, 3);
    a.set(2, rational(1, 7));
    a.set(5, -4);
    REQUIRE(a / a == TruncatedSeries::one(6));

    // 1 / (1 - t) = geometric series
    TruncatedSeries om(8);
    om.set(0, 1);
    om.set(1, -1);
    REQUIRE(TruncatedSeries::one(8) / om == geometric(8));

    // q * b = a up to truncation
    TruncatedSeries b = TruncatedSeries::exp_series(6);
    TruncatedSeries q = a / b;
    REQUIRE(q * b == a);

    TruncatedSeries zero_const(6);
    zero_const.set(1, 1);
    REQUIRE_THROWS_AS(a / zero_const, std::domain_error);
}

TEST_CASE("bernoulli generating function route") {
    auto c = gf_coefficients(GfKind::bernoulli, 14);
    REQUIRE(c[0] == 1);
    REQUIRE(c[1] == rational(-1, 2));
    REQUIRE(c[2] == rational(1, 6));
    REQUIRE(c[12] == rational(-691, 2730));
    for (std::size_t n = 0; n <= 14; ++n) REQUIRE(c[n] == bernoulli(n));
}

TEST_CASE("first kind Euler generating function route") {
    auto c = gf_coefficients(GfKind::euler_first, 12);
    REQUIRE(c[0] == 1);
    REQUIRE(c[1] == rational(-1, 2));
    REQUIRE(c[2] == 0);
    REQUIRE(c[3] == rational(1, 4));
    for (std::size_t k = 1; 2 * k <= 12; ++k) REQUIRE(c[2 * k] == 0); // even-index vanishing
    for (std::size_t n = 0; n <= 12; ++n) REQUIRE(c[n] == euler_first(n));
}

TEST_CASE("second kind Euler generating function route") {
    auto c = gf_coefficients(GfKind::euler_second, 8);
    REQUIRE(c[2] == -1);
    REQUIRE(c[4] == 5);
    REQUIRE(c[6] == -61); // the true sign of the printed table value
    REQUIRE(c[8] == 1385);
    for (std::size_t n = 0; n <= 8; ++n) REQUIRE(c[n] == euler_second(n));
}

TEST_CASE("Euler polynomial generating function route") {
    Rational x = rational(7, 3);
    auto c = gf_coefficients(GfKind::euler_first_poly, 8, x);
    for (std::size_t n = 0; n <= 8; ++n) REQUIRE(c[n] == euler_poly(n, x));
    REQUIRE(c[1] == x - rational(1, 2));
}

TEST_CASE("sec series carries second kind Euler numbers") {
    auto c = gf_coefficients(GfKind::sec, 10);
    for (std::size_t n = 0; 2 * n <= 10; ++n) {
        Rational expect = ((n % 2 == 0) ? 1 : -1) * euler_second(2 * n) / Rational(factorial(2 * n));
        REQUIRE(c[2 * n] == expect);
    }
    REQUIRE(c[1] == 0);
}

TEST_CASE("tan series carries the odd first kind Euler numbers") {
    // tan(t/2) = sum (-1)^{n+1} (t/2-argument scaled) ... checked through the
    // unscaled identity: tan coefficients t_{2n+1} satisfy
    // t_{2n+1} = (-1)^{n+1} E^*_{2n+1} 2^{2n+1} / (2n+1)! after halving the
    // argument; verify tan(a/2) = sum (-1)^{n+1} a^{2n+1} E^*_{2n+1} / (2^{?}...)
    // Direct check: coefficient of a^{2n+1} in tan(a/2) equals
    // (-1)^{n+1} E^*_{2n+1} / (2n+1)!.
    auto c = gf_coefficients(GfKind::tan, 11);
    for (std::size_t n = 0; 2 * n + 1 <= 11; ++n) {
        // tan(a/2) coefficient = c[2n+1] / 2^{2n+1}
        Rational lhs = c[2 * n + 1] / Rational(two_pow(2 * n + 1));
        Rational rhs = ((n % 2 == 1) ? 1 : -1) * euler_first(2 * n + 1) /
                       Rational(factorial(2 * n + 1));
        REQUIRE(lhs == rhs);
    }
    REQUIRE(c[0] == 0);
    REQUIRE(c[1] == 1);
    REQUIRE(c[3] == rational(1, 3));
}

TEST_CASE("x cot x series carries Bernoulli numbers") {
    // 1 - z cot z = 2 sum_{n>=1} zeta(2n) z^{2n} / pi^{2n}; equivalently
    // z cot z = sum_n (-4)^n B_{2n} z^{2n} / (2n)!.
    auto c = gf_coefficients(GfKind::x_cot_x, 12);
    for (std::size_t n = 0; 2 * n <= 12; ++n) {
        Rational expect = pow_rational(Rational(-4), static_cast<long>(n)) * bernoulli(2 * n) /
                          Rational(factorial(2 * n));
        REQUIRE(c[2 * n] == expect);
    }
    REQUIRE_THROWS_AS(gf_coefficients(GfKind::bernoulli, 0), std::invalid_argument);
}
