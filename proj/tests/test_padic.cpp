#include <catch_amalgamated.hpp>

#include "ezeta/padic.hpp"
#include "ezeta/padic_integrals.hpp"
#include "ezeta/special_numbers.hpp"

using namespace ezeta;

TEST_CASE("PadicInt construction and arithmetic") {
    PadicInt a(3, 2, 7), b(3, 2, 5);
    REQUIRE((a + b).residue() == 3);
    REQUIRE((a * b).residue() == 8);
    REQUIRE((a - b).residue() == 2);
    REQUIRE(a.str() == "7 mod 3^2");
    REQUIRE(PadicInt(3, 2, -1).residue() == 8);
    REQUIRE_THROWS_AS(PadicInt(2, 3, 1), std::invalid_argument);  // p = 2 rejected
    REQUIRE_THROWS_AS(PadicInt(9, 3, 1), std::invalid_argument);  // composite rejected
    REQUIRE_THROWS_AS(PadicInt(3, 0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(PadicInt(3, 2, 1) + PadicInt(5, 2, 1), std::invalid_argument);
    // depth narrows to the smaller operand
    REQUIRE((PadicInt(3, 4, 1) + PadicInt(3, 2, 1)).depth() == 2);
}

TEST_CASE("valuation, units, inverse, division") {
    REQUIRE(PadicInt(3, 4, 18).valuation().value == 2);
    REQUIRE_FALSE(PadicInt(3, 4, 18).valuation().at_least);
    Valuation vz = PadicInt(3, 4, 0).valuation();
    REQUIRE(vz.value == 4);
    REQUIRE(vz.at_least);
    REQUIRE(PadicInt(5, 3, 7).is_unit());
    REQUIRE_FALSE(PadicInt(5, 3, 10).is_unit());

    PadicInt u(7, 3, 4);
    REQUIRE((u * u.inverse()).residue() == 1);
    REQUIRE_THROWS_AS(PadicInt(7, 3, 14).inverse(), std::domain_error);

    // valuation-aware division: result depth shrinks by v(divisor)
    PadicInt num(3, 4, 18), den(3, 4, 6);
    PadicInt q = divide(num, den);
    REQUIRE(q.depth() == 3);
    REQUIRE(q.residue() == 3);
    REQUIRE_THROWS_AS(divide(PadicInt(3, 4, 1), PadicInt(3, 4, 3)), std::domain_error);
    REQUIRE_THROWS_AS(divide(PadicInt(3, 4, 9), PadicInt(3, 4, 0)), std::domain_error);
}

TEST_CASE("pow and reduce") {
    REQUIRE(PadicInt(5, 3, 2).pow(7).residue() == 128 % 125);
    REQUIRE(PadicInt(5, 3, 2).pow(0).residue() == 1);
    REQUIRE(PadicInt(3, 4, 77).reduce(2).residue() == 77 % 9);
}

TEST_CASE("padic_of_rational") {
    // -1/2 = 4 mod 9
    REQUIRE(padic_of_rational(rational(-1, 2), 3, 2).residue() == 4);
    REQUIRE(padic_of_rational(Rational(1), 5, 3).residue() == 1);
    REQUIRE_THROWS_AS(padic_of_rational(rational(1, 6), 3, 2), std::domain_error);
}

TEST_CASE("Iwasawa logarithm") {
    REQUIRE(padic_log(PadicInt(5, 4, 1), 4).residue() == 0);
    REQUIRE_THROWS_AS(padic_log(PadicInt(5, 4, 2), 4), std::domain_error);
    // functional equation log(u^2) = 2 log(u) at u = 6, p = 5
    PadicInt u(5, 6, 6);
    PadicInt lhs = padic_log(u * u, 6);
    PadicInt l = padic_log(u, 6);
    REQUIRE(lhs == l + l);
    // leading-term valuation: v(log(1+p)) = 1
    Valuation v = padic_log(PadicInt(7, 5, 8), 5).valuation();
    REQUIRE_FALSE(v.at_least);
    REQUIRE(v.value == 1);
}

TEST_CASE("fermionic integral moments") {
    REQUIRE(fermionic_sum(0, 3, 3).residue() == 1);
    REQUIRE(fermionic_sum(1, 3, 2).residue() == 4);
    REQUIRE(fermionic_sum(1, 3, 2) == padic_of_rational(euler_first(1), 3, 2));
    REQUIRE(fermionic_sum(2, 3, 2).residue() == 0);
    REQUIRE(fermionic_sum_exact(2, 3, 2) == 36);
    // valuation growth toward E_n^*: v_p(S_N - E_n^*) >= N
    for (long p : {3L, 5L, 7L})
        for (std::size_t n = 0; n <= 10; ++n)
            for (long N = 1; N <= 6; ++N) {
                if (p == 7 && N == 6) continue; // 7^6 terms are covered at p=7, N<=5
                Rational diff = Rational(fermionic_sum_exact(n, p, N)) - euler_first(n);
                if (diff == 0) continue;
                REQUIRE(valuation(diff, p) >= N);
            }
}

TEST_CASE("Volkenborn integral moments") {
    VolkenbornResult r0 = volkenborn_sum(0, 5, 3);
    REQUIRE(r0.exact == 1);
    REQUIRE(r0.scale == 0);
    // exact difference for n = 1 is p^N / 2: valuation N
    VolkenbornResult r1 = volkenborn_sum(1, 5, 4);
    REQUIRE(r1.exact - bernoulli(1) == rational(pow_int(5, 4), 2));
    // n = 2 difference has valuation >= N
    VolkenbornResult r2 = volkenborn_sum(2, 5, 4);
    REQUIRE(valuation(r2.exact - bernoulli(2), 5) >= 4);
    REQUIRE(r2.scale == 0);
    // denominator carry: B_4 = -1/30 puts one 5 in the denominator
    VolkenbornResult r4 = volkenborn_sum(4, 5, 3);
    REQUIRE(r4.scale == 1);
    REQUIRE(r4.reduced.depth() == 2);
    // reduced value matches p * B_4 at the reported depth
    REQUIRE(r4.reduced == padic_of_rational(bernoulli(4) * 5, 5, 2));
    REQUIRE_THROWS_AS(volkenborn_sum(2, 3, 1), std::domain_error);
}

TEST_CASE("fermionic shift identity") {
    REQUIRE(fermionic_shift_check(1, 2, 3, 3).ok);
    for (long m = 1; m <= 6; ++m) REQUIRE(fermionic_shift_check(0, m, 5, 3).ok);
    for (long p : {3L, 5L})
        for (std::size_t n = 0; n <= 8; ++n)
            for (long m = 1; m <= 4; ++m)
                for (long N = 1; N <= 5; ++N) REQUIRE(fermionic_shift_check(n, m, p, N).ok);
    REQUIRE_THROWS_AS(fermionic_shift_check(1, 0, 3, 2), std::invalid_argument);

    // iterating the 1-shift m times reproduces the m-shift form exactly
    for (std::size_t n = 0; n <= 6; ++n)
        for (long m = 1; m <= 4; ++m) {
            long p = 3, N = 4;
            Int s = fermionic_sum_exact(n, p, N);
            Int iterated = s;
            for (long step = 0; step < m; ++step) {
                // I(f_{x+1}) = -I(f_x) + 2*(shifted 0-point), unrolled on the
                // finite sums: S(shift+1) = -S(shift) + 2*shift^n
                Int point = (step == 0 && n == 0) ? Int(1) : pow_int(step, n);
                iterated = -iterated + 2 * point;
            }
            Int direct = fermionic_sum_exact(n, p, N, m);
            REQUIRE(PadicInt(p, N, iterated - direct).residue() == 0);
        }
}

TEST_CASE("mu_{-q} distribution refinement identity") {
    REQUIRE(mu_minus_q_distribution_check(0, 1, 3, 1, Rational(2)));
    REQUIRE(mu_minus_q_distribution_check(2, 5, 3, 2, rational(7, 3)));
    for (const Rational& q : {Rational(2), rational(7, 3), rational(-3, 5)})
        for (long p : {3L, 5L, 7L})
            for (unsigned long d : {1ul, 7ul}) {
                if (d % static_cast<unsigned long>(p) == 0) continue;
                for (long N = 1; N <= 3; ++N)
                    for (unsigned long a : {0ul, 1ul, 2ul})
                        REQUIRE(mu_minus_q_distribution_check(a, d, p, N, q));
            }
    REQUIRE_THROWS_AS(mu_minus_q_distribution_check(0, 2, 3, 1, Rational(2)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(mu_minus_q_distribution_check(0, 1, 3, 1, Rational(1)), std::domain_error);
}
