// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// argv[1] (optional) is the path to the CLI binary, used by criterion 13.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ezeta/padic_integrals.hpp"
#include "ezeta/powerseries.hpp"
#include "ezeta/qanalog.hpp"
#include "ezeta/zeta_values.hpp"

using namespace ezeta;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << "\n";
    if (!ok) ++failures;
}

bool rel_close(const BigFloat& value, const BigFloat& target, long tol_exp) {
    return within_tolerance(value, target, BigFloat::two_pow(tol_exp, 512));
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace

int main(int argc, char** argv) {
    const long bits = 256;

    { // 1. Bernoulli tables: two routes, spot values
        auto route = gf_coefficients(GfKind::bernoulli, 60);
        bool ok = true;
        auto t0 = std::chrono::steady_clock::now();
        for (std::size_t n = 0; n <= 60; ++n) ok = ok && bernoulli(n) == route[n];
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && bernoulli(12) == rational(-691, 2730) && bernoulli(20) == rational(-174611, 330) &&
             secs < 1.0;
        report(1, "B_n recurrence = generating-function route for n <= 60; "
                  "B_12 = -691/2730, B_20 = -174611/330; under 1 s", ok);
    }

    { // 2. Second kind from first kind, exact for k <= 60
        bool ok = true;
        for (std::size_t k = 0; k <= 60; ++k) ok = ok && second_from_first(k) == euler_second(k);
        ok = ok && euler_second(2) == -1 && euler_second(4) == 5 && euler_second(6) == -61;
        report(2, "sum C(k,l) 2^l E_l^* = E_k for k <= 60; E_2 = -1, E_4 = 5, "
                  "E_6 = -61 (printed table sign corrected)", ok);
    }

    { // 3. Two closed forms of zeta(2n) and the bridge identity
        bool ok = true;
        for (std::size_t n = 1; n <= 30; ++n) {
            ok = ok && zeta_even(n) == zeta_even_via_euler(n);
            Rational bridge = Rational(2) * (Rational(1) - Rational(two_pow(2 * n))) *
                              bernoulli(2 * n) / Rational(static_cast<long>(2 * n));
            ok = ok && euler_first(2 * n - 1) == bridge;
        }
        report(3, "zeta_even = zeta_even_via_euler and E*_{2n-1} = 2(1-4^n)B_{2n}/(2n) "
                  "for n <= 30, exact", ok);
    }

    { // 4. Euler zeta at even integers, exact and numeric
        bool ok = euler_zeta_even(1) == PiMultiple{rational(-1, 6), 2} &&
                  euler_zeta_even(2) == PiMultiple{rational(-7, 360), 4};
        for (std::size_t n = 1; n <= 8; ++n) {
            BigFloat numeric = euler_zeta_eval(BigFloat(static_cast<long>(2 * n), bits), bits);
            ok = ok && rel_close(numeric, euler_zeta_even(n).eval(bits), -200);
        }
        report(4, "zeta_E(2) = -pi^2/6, zeta_E(4) = -7pi^4/360 exact; numeric "
                  "agreement to 2^-200 for n <= 8", ok);
    }

    { // 5. Dirichlet beta numeric vs closed form; lambda splitting
        bool ok = true;
        for (std::size_t n = 0; n <= 6; ++n) {
            BigFloat numeric =
                dirichlet_beta_eval(BigFloat(static_cast<long>(2 * n + 1), bits), bits);
            ok = ok && rel_close(numeric, beta_odd(n).eval(bits), -200);
        }
        for (std::size_t n = 1; n <= 30; ++n) {
            PiMultiple z = zeta_even(n);
            Rational f = Rational(1) - pow_rational(Rational(4), -static_cast<long>(n));
            ok = ok && lambda_even(n) == PiMultiple{f * z.coeff, z.power};
        }
        report(5, "beta(2n+1) numeric = closed form to 2^-200 for n <= 6; "
                  "lambda(2n) = (1-4^-n) zeta(2n) exact for n <= 30", ok);
    }

    { // 6. Odd-zeta residual
        bool ok = true;
        for (std::size_t n = 1; n <= 5; ++n)
            ok = ok && corollary2_residual(n, bits) < BigFloat::two_pow(-200, bits);
        report(6, "zeta(2n+1,1/4) + 2^{2n}(1-2^{2n+1}) zeta(2n+1) residual < 2^-200 "
                  "for n = 1..5 (n = 1 is zeta(3,1/4) = 28 zeta(3) + pi^3)", ok);
    }

    { // 7. Mixed Bernoulli-Euler identity
        auto [l1, r1] = mixed_identity_eq21(1);
        bool ok = l1 == rational(1, 24) && r1 == rational(1, 24);
        for (std::size_t k = 1; k <= 40; ++k) {
            auto [lhs, rhs] = mixed_identity_eq21(k);
            ok = ok && lhs == rhs;
        }
        report(7, "mixed Bernoulli-Euler identity exact for k = 1..40; k = 1 both sides 1/24", ok);
    }

    { // 8. Euler zeta vs (1 - 2^{1-s}) zeta(s) chain at four points
        bool ok = true;
        for (const Rational& s : {Rational(2), Rational(3), Rational(4), rational(11, 2)}) {
            BigFloat sv(s, bits);
            BigFloat factor =
                BigFloat(1, bits) - pow_real(BigFloat(2, bits), BigFloat(1, bits) - sv, bits);
            BigFloat expect = (factor * zeta_em(sv, bits)).ldexp(1).neg();
            ok = ok && rel_close(euler_zeta_eval(sv, bits), expect, -200);
        }
        report(8, "zeta_E(s) = -2(1-2^{1-s}) zeta(s) numerically to 2^-200 at "
                  "s in {2, 3, 4, 11/2}", ok);
    }

    { // 9. p-adic moment convergence
        bool ok = true;
        for (long p : {3L, 5L, 7L})
            for (std::size_t n = 0; n <= 10; ++n)
                for (long N = 1; N <= 6; ++N) {
                    Rational diff = Rational(fermionic_sum_exact(n, p, N)) - euler_first(n);
                    if (diff != 0) ok = ok && valuation(diff, p) >= N;
                }
        ok = ok && fermionic_sum(1, 3, 2).residue() == 4 &&
             fermionic_sum(1, 3, 2) == padic_of_rational(rational(-1, 2), 3, 2);
        for (long p : {3L, 5L})
            for (std::size_t n = 0; n <= 6; ++n)
                for (long N = 2; N <= 5; ++N) {
                    VolkenbornResult r = volkenborn_sum(n, p, N);
                    Rational diff = r.exact - bernoulli(n);
                    long need = N - std::max<long>(r.scale, 1);
                    if (diff != 0) ok = ok && valuation(diff, p) >= need;
                }
        report(9, "fermionic v_p(S_N - E_n^*) >= N for p in {3,5,7}, n <= 10, N <= 6 "
                  "(S_2 = 4 = -1/2 mod 9); Volkenborn valuation >= reported depth "
                  "for p in {3,5}, n <= 6, N <= 5", ok);
    }

    { // 10. Distribution identity grid
        bool ok = true;
        for (const Rational& q : {Rational(2), rational(7, 3), rational(-3, 5)})
            for (long p : {3L, 5L, 7L})
                for (unsigned long d : {1ul, 7ul}) {
                    if (d % static_cast<unsigned long>(p) == 0) continue;
                    for (long N = 1; N <= 3; ++N)
                        for (unsigned long a : {0ul, 2ul})
                            ok = ok && mu_minus_q_distribution_check(a, d, p, N, q);
                }
        report(10, "mu_{-q} refinement identity exact on the (a,d,p,N) grid for "
                   "q in {2, 7/3, -3/5}", ok);
    }

    { // 11. q -> 1 limit scaling and p-adic cross-check
        bool ok = true;
        const long qbits = 320;
        for (std::size_t m = 0; m <= 8; ++m) {
            BigFloat b(bernoulli(m), qbits);
            BigFloat prev(qbits);
            for (int e = 3; e <= 5; ++e) {
                Rational eps = pow_rational(rational(1, 10), e);
                BigFloat d = abs_diff(carlitz_q_bernoulli(m, Rational(1) + eps, qbits), b);
                if (e > 3) {
                    BigFloat ratio = prev / d;
                    ok = ok && BigFloat(5, qbits) <= ratio && ratio <= BigFloat(20, qbits);
                }
                prev = d;
            }
        }
        for (std::size_t m = 0; m <= 3; ++m) {
            PadicInt closed =
                carlitz_q_bernoulli_padic(m, PadicInt(5, 6 + static_cast<long>(m), 6));
            for (long N = 2; N <= 6; ++N) {
                PadicInt finite = q_bosonic_sum(m, 5, N, Rational(6));
                long d = std::min(finite.depth(), closed.depth());
                Valuation v = (finite.reduce(d) - closed.reduce(d)).valuation();
                ok = ok && v.value >= std::min(N - static_cast<long>(m) - 1, d);
            }
        }
        report(11, "|beta_{m,1+eps} - B_m| scales linearly in eps (ratio within factor 2) "
                   "for m <= 8; p-adic cross-check valuation >= N - m - 1 at p = 5", ok);
    }

    { // 12. q-zeta diagnostic is computed and reported, never asserted
        QZetaDiagnostic d = q_zeta_residual(1, rational(1, 2), 128);
        bool ok = d.residual.sign() >= 0; // finite value came back
        std::cout << "       note: documented normalization mismatch, residual reported only: "
                  << "|zeta_q(0) + beta_{1,q}| = " << d.residual.str(20) << " at q = 1/2\n";
        report(12, "q_zeta_residual computed and reported as a diagnostic (no vanishing "
                   "assertion); normalization mismatch flagged", ok);
    }

    { // 13. CLI determinism and time budget
        bool ok = true;
        if (argc > 1) {
            std::string cli = argv[1];
            std::string out1 = "acceptance_report_1.json";
            std::string out2 = "acceptance_report_2.json";
            auto t0 = std::chrono::steady_clock::now();
            int rc1 = std::system((cli + " verify --suite all --format json --out " + out1).c_str());
            int rc2 = std::system((cli + " verify --suite all --format json --out " + out2).c_str());
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::string a = slurp(out1), b = slurp(out2);
            ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b && secs < 60.0;
            std::remove(out1.c_str());
            std::remove(out2.c_str());
        } else {
            ok = false;
        }
        report(13, "`verify --suite all` exits 0 in under 60 s with byte-identical JSON "
                   "across runs", ok);
    }

    if (failures != 0) std::cout << failures << " criterion(s) FAILED\n";
    return failures == 0 ? 0 : 1;
}
