// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria (0 when all pass).

#include "beukers/arith.hpp"
#include "beukers/bounds.hpp"
#include "beukers/constants.hpp"
#include "beukers/forms.hpp"
#include "beukers/legendre.hpp"
#include "beukers/oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace beukers;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > limit_s) {
        o.ok = false;
        o.detail = "over time limit";
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %2d %-44s %8.3fs (limit %gs)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs, limit_s,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

Rational tenth_power(int e) {
    BigInt d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, e);
    return Rational(BigInt(1), d);
}

BallReal around(const char* decimal, int tol_exp, Precision p) {
    const std::string s(decimal);
    const auto dot = s.find('.');
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    const Rational v(BigInt(s.substr(0, dot) + s.substr(dot + 1), 10), den);
    return BallReal(v - tenth_power(tol_exp), v + tenth_power(tol_exp), p);
}

}  // namespace

int main() {
    const Precision p50(50);

    criterion(1, "closed-form base integrals", 1, [&] {
        Outcome o;
        const BallReal i00 = i_rs(0, 0).realize(p50);
        const BallReal j00 = j_rs(0, 0).realize(p50);
        o.require(around("1.6449340668", 9, p50).contains(i00), "i_rs(0,0) not within 1e-9 of 1.6449340668");
        o.require(around("2.4041138064", 9, p50).contains(j00), "j_rs(0,0) not within 1e-9 of 2*1.2020569032");
        return o;
    });

    criterion(2, "binomial and Rodrigues polynomials agree", 5, [] {
        Outcome o;
        for (unsigned n = 0; n <= 30; ++n)
            o.require(legendre_binomial(n) == legendre_rodrigues(n), "mismatch at n=" + std::to_string(n));
        return o;
    });

    criterion(3, "scaled rational parts are integers", 60, [] {
        Outcome o;
        for (unsigned n = 0; n <= 50; ++n) {
            try {
                integerize(beukers_I(n), n);
                integerize(beukers_J(n), n);
            } catch (const IntegralityError& e) {
                o.require(false, "n=" + std::to_string(n) + ": " + e.what());
            }
        }
        return o;
    });

    criterion(4, "zeta(2) inequality chain, n <= 20", 60, [&] {
        Outcome o;
        const ChainSummary s = verify_chain_zeta2(20, p50);
        o.require(s.reports.size() == 20, "wrong report count");
        for (const auto& r : s.reports) o.require(r.holds(), "fails at n=" + std::to_string(r.n));
        return o;
    });

    criterion(5, "zeta(3) inequality chain, n <= 15", 60, [&] {
        Outcome o;
        const ChainSummary s = verify_chain_zeta3(15, p50);
        o.require(s.reports.size() == 15, "wrong report count");
        for (const auto& r : s.reports) o.require(r.holds(), "fails at n=" + std::to_string(r.n));
        return o;
    });

    criterion(6, "series enclosures meet exact forms, n <= 6", 120, [&] {
        Outcome o;
        const Rational width = tenth_power(8);
        for (unsigned n = 0; n <= 6; ++n) {
            const SeriesEnclosure si = series_abs_In(n, 20000);
            const SeriesEnclosure sj = series_Jn(n, 20000);
            const std::string at = " at n=" + std::to_string(n);
            o.require(si.width() <= width, "|I_n| enclosure too wide" + at);
            o.require(sj.width() <= width, "J_n enclosure too wide" + at);
            o.require(si.meets(beukers_I(n).realize(p50).abs()), "|I_n| disagrees" + at);
            o.require(sj.meets(beukers_J(n).realize(p50)), "J_n disagrees" + at);
        }
        return o;
    });

    criterion(7, "integration by parts, 0 <= n <= m <= 12", 5, [] {
        Outcome o;
        for (unsigned m = 0; m <= 12; ++m)
            for (unsigned n = 0; n <= m; ++n) {
                const auto [lhs, rhs] = check_ibp(n, m);
                o.require(lhs == rhs, "n=" + std::to_string(n) + " m=" + std::to_string(m));
            }
        return o;
    });

    criterion(8, "maxima of g2 and g3", 30, [&] {
        Outcome o;
        const Rational tol_v = tenth_power(10);
        const double tol_x = 1e-6;
        const MaxResult m2 = max_g2(kDefaultGridPoints, kDefaultRefinements, p50);
        const MaxResult m3 = max_g3(kDefaultGridPoints, kDefaultRefinements, p50);
        const auto value_gap = [&](const MaxResult& m) {
            return (m.value_ball - BallReal(m.grid.value, p50)).abs().upper();
        };
        o.require(value_gap(m2) <= tol_v, "g2 grid value off by more than 1e-10");
        o.require(value_gap(m3) <= tol_v, "g3 grid value off by more than 1e-10");
        for (std::size_t i = 0; i < 2; ++i)
            o.require(std::abs(m2.grid.point[i].raw().get_d() - m2.point_ball[i].to_double()) <= tol_x,
                      "g2 argmax off by more than 1e-6");
        for (std::size_t i = 0; i < 3; ++i)
            o.require(std::abs(m3.grid.point[i].raw().get_d() - m3.point_ball[i].to_double()) <= tol_x,
                      "g3 argmax off by more than 1e-6");
        o.require(m2.value == QuadSurd(Rational(-11, 2), Rational(5, 2), 5), "g2 analytic value");
        o.require(m3.value == QuadSurd(Rational(17), Rational(-12), 2), "g3 analytic value");
        for (const auto& r : m3.residuals) o.require(r.to_ball(p50).contains_zero(), "g3 residual excludes 0");
        for (const auto& r : m2.residuals) o.require(r.to_ball(p50).contains_zero(), "g2 residual excludes 0");
        o.require(m3.rival_value && m3.rival_value->to_ball(p50).certainly_less(m3.value_ball),
                  "competing point not strictly lower");
        return o;
    });

    criterion(9, "digit anchors of the contraction factors", 1, [&] {
        Outcome o;
        const BallReal e2 = const_phi5(p50).ball * Rational(8);
        const BallReal e3 = const_delta3(p50).ball * Rational(21);
        o.require(e2.lower() >= Rational(7213, 10000) && e2.upper() < Rational(7214, 10000), "8 Phi^5 digits");
        o.require(e2.upper() < Rational(3, 4), "8 Phi^5 not below 3/4");
        o.require(e3.lower() >= Rational(618, 1000) && e3.upper() < Rational(619, 1000), "21 (17-12 sqrt2) digits");
        o.require(e3.upper() < Rational(2, 3), "21 (17-12 sqrt2) not below 2/3");
        return o;
    });

    criterion(10, "d_n pipeline up to 10^4", 30, [&] {
        Outcome o;
        const std::uint64_t limit = 10000;
        const PrimeTable table(limit);
        DnStream stream(table);
        BigInt running = 1;  // iterated lcm
        BigInt lcm_sq = 1;
        for (std::uint64_t n = 1; n <= limit; ++n) {
            const BigInt& dn = stream.next().second;
            const std::string at = " at n=" + std::to_string(n);
            mpz_lcm_ui(running.get_mpz_t(), running.get_mpz_t(), n);
            o.require(dn_prime_powers(table, n).dn == running, "prime powers differ from iterated lcm" + at);
            o.require(dn == running, "streamed d_n differs" + at);
            BigInt bound;
            mpz_ui_pow_ui(bound.get_mpz_t(), n, table.prime_count(n));
            o.require(running <= bound, "d_n > n^pi(n)" + at);
            if (n <= 200) {
                mpz_lcm_ui(lcm_sq.get_mpz_t(), lcm_sq.get_mpz_t(), n * n);
                o.require(lcm_sq == running * running, "lcm of squares differs from d_n^2" + at);
            }
        }
        o.require(running == dn_iterated_lcm(limit), "iterated lcm mismatch");
        const BallReal ratio = BallReal(Rational(running), p50).log() / Rational(static_cast<long>(limit));
        o.require(ratio.lower() >= Rational(9, 10) && ratio.upper() <= Rational(11, 10), "ln d_n / n outside [0.9, 1.1]");
        return o;
    });

    std::printf("%d criteria failed\n", failures);
    return failures;
}
