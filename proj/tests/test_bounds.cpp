#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beukers/arith.hpp"
#include "beukers/bounds.hpp"

#include <cmath>
#include <random>

using namespace beukers;

namespace {
const Precision kPrec(50);

Rational random_unit(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> den(2, 10000);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(1, d - 1);
    return Rational(num(rng), d);
}
}  // namespace

TEST_CASE("g2 values") {
    CHECK(g2(Rational(0), Rational(1, 2)) == Rational(0));
    CHECK(g2(Rational(1, 2), Rational(1, 2)) == Rational(1, 12));
    CHECK(g2(Rational(1), Rational(1, 3)) == Rational(0));
    CHECK_THROWS(g2(Rational(1), Rational(1)));
    CHECK_THROWS(g2(Rational(-1, 2), Rational(1, 2)));
    CHECK(g2_approx(0.5, 0.5) == doctest::Approx(1.0 / 12));
}

TEST_CASE("g3 values") {
    CHECK(g3(Rational(0), Rational(1, 2), Rational(1, 3)) == Rational(0));
    CHECK(g3(Rational(1, 2), Rational(0), Rational(1, 3)) == Rational(0));
    CHECK(g3(Rational(1, 2), Rational(1, 2), Rational(0)) == Rational(0));
    CHECK(g3(Rational(1, 2), Rational(1, 2), Rational(1, 2)) == Rational(1, 36));
    const QuadSurd x(Rational(2), Rational(-1), 2);
    const QuadSurd v = g3(x, x, QuadSurd(Rational(1, 2)));
    CHECK(v == QuadSurd(Rational(17), Rational(-12), 2));
    CHECK(g3(x.to_ball(kPrec), x.to_ball(kPrec), BallReal(Rational(1, 2), kPrec)).overlaps(v.to_ball(kPrec)));
}

TEST_CASE("symmetry and interior positivity on random rationals") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Rational x = random_unit(rng), y = random_unit(rng), z = random_unit(rng);
        CHECK(g2(x, y) == g2(y, x));
        CHECK(g2(x, y).sign() > 0);
        CHECK(g3(x, y, z).sign() > 0);
        CHECK(BallReal(g2(x, y), kPrec).overlaps(g2(BallReal(x, kPrec), BallReal(y, kPrec))));
    }
}

TEST_CASE("analytic maximum of g2") {
    const MaxResult m = max_g2();
    const QuadSurd phi(Rational(-1, 2), Rational(1, 2), 5);
    CHECK(m.point == std::vector<QuadSurd>{phi, phi});
    CHECK(m.value == QuadSurd(Rational(-11, 2), Rational(5, 2), 5));
    CHECK(m.value_from_formula == m.value);
    CHECK(m.residuals_vanish());
    CHECK(m.grid_below_analytic());
    REQUIRE(m.diagonal_grid.has_value());
    const double phi_d = (std::sqrt(5.0) - 1) / 2;
    for (const Rational& c : m.grid.point) CHECK(std::abs(c.raw().get_d() - phi_d) < 1e-6);
    CHECK(std::abs(m.diagonal_grid->point[0].raw().get_d() - phi_d) < 1e-6);
    const BallReal gap = m.value_ball - BallReal(m.grid.value, kPrec);
    CHECK(gap.upper() < Rational(BigInt(1), BigInt("10000000000")));
    CHECK(m.value_ball.mid_fixed(10) == "0.0901699437");
}

TEST_CASE("analytic maximum of g3") {
    const MaxResult m = max_g3();
    const QuadSurd x(Rational(2), Rational(-1), 2);
    CHECK(m.point == std::vector<QuadSurd>{x, x, QuadSurd(Rational(1, 2))});
    CHECK(m.value == QuadSurd(Rational(17), Rational(-12), 2));
    CHECK(m.residuals.size() == 3);
    CHECK(m.residuals_vanish());
    for (const QuadSurd& r : m.residuals) CHECK(r.to_ball(kPrec).contains_zero());
    CHECK(m.closed_form_solution_matches);
    CHECK(m.grid_below_analytic());
    const double xd = 2 - std::sqrt(2.0);
    CHECK(std::abs(m.grid.point[0].raw().get_d() - xd) < 1e-6);
    CHECK(std::abs(m.grid.point[1].raw().get_d() - xd) < 1e-6);
    CHECK(std::abs(m.grid.point[2].raw().get_d() - 0.5) < 1e-6);
    CHECK((m.value_ball - BallReal(m.grid.value, kPrec)).upper() < Rational(BigInt(1), BigInt("10000000000")));
    REQUIRE(m.rival_value.has_value());
    CHECK(*m.rival_value < m.value);
    CHECK(m.rival_value->to_ball(kPrec).certainly_less(m.value_ball));
}

TEST_CASE("analytic maxima dominate a low-discrepancy sample") {
    // Additive recurrence with the plastic-number generalization; 10^6 points.
    const double g = 1.32471795724474602596;
    const double a1 = 1 / g, a2 = 1 / (g * g);
    const double h = 1.22074408460575947536;
    const double b1 = 1 / h, b2 = 1 / (h * h), b3 = 1 / (h * h * h);
    const Precision p(15);
    const BallReal m2 = max_g2().value_ball + BallReal(Rational(BigInt(1), BigInt("1000000000000")), p);
    const BallReal m3 = max_g3().value_ball + BallReal(Rational(BigInt(1), BigInt("1000000000000")), p);
    double x = 0.5, y = 0.5, u = 0.5, v = 0.5, w = 0.5;
    bool ok2 = true, ok3 = true;
    for (int i = 0; i < 1000000; ++i) {
        x = std::fmod(x + a1, 1.0);
        y = std::fmod(y + a2, 1.0);
        u = std::fmod(u + b1, 1.0);
        v = std::fmod(v + b2, 1.0);
        w = std::fmod(w + b3, 1.0);
        // Doubles are exact dyadic rationals, so the balls enclose g at exactly these points.
        const BallReal bx(Rational(mpq_class(x)), p), by(Rational(mpq_class(y)), p);
        const BallReal bu(Rational(mpq_class(u)), p), bv(Rational(mpq_class(v)), p), bw(Rational(mpq_class(w)), p);
        if (g2(bx, by).upper() > m2.lower()) ok2 = false;
        if (g3(bu, bv, bw).upper() > m3.lower()) ok3 = false;
    }
    CHECK(ok2);
    CHECK(ok3);
}

TEST_CASE("bound factors and digit anchors") {
    CHECK(bound_factor(ZetaKind::Two, kPrec).exact == QuadSurd(Rational(-11, 2), Rational(5, 2), 5));
    CHECK(bound_factor(ZetaKind::Three, kPrec).exact == QuadSurd(Rational(17), Rational(-12), 2));
    CHECK(bound_lead(ZetaKind::Two) == 1);
    CHECK(bound_lead(ZetaKind::Three) == 2);
    const BallReal e2 = bound_factor(ZetaKind::Two, kPrec).ball * Rational(8);
    CHECK(e2.mid_fixed(4) == "0.7214");
    CHECK(e2.upper() < Rational(3, 4));
    CHECK(e2.lower() > Rational(7213, 10000));
    const BallReal e3 = bound_factor(ZetaKind::Three, kPrec).ball * Rational(21);
    CHECK(e3.lower() > Rational(618, 1000));
    CHECK(e3.upper() < Rational(619, 1000));
    CHECK(e3.upper() < Rational(2, 3));
}

TEST_CASE("inequality chain for zeta(2)") {
    const ChainSummary s = verify_chain_zeta2(20, kPrec);
    REQUIRE(s.reports.size() == 20);
    for (const BoundReport& r : s.reports) {
        CAPTURE(r.n);
        CHECK(r.holds());
        CHECK(r.positive);
        CHECK(r.integers.n == r.n);
    }
    CHECK(s.all_hold());
    CHECK_FALSE(s.any_inconclusive());
    CHECK(s.strictly_decreasing);
    CHECK(s.reports[0].abs_value.mid_fixed(4) == "0.0652");
    CHECK(s.reports[0].bound.mid_fixed(4) == "0.1483");
    CHECK(s.reports[1].abs_value.mid_fixed(4) == "0.0037");
    CHECK(s.reports[1].bound.mid_fixed(4) == "0.0134");
    CHECK(s.scan.base == 8);
    CHECK(s.scan.crossover == std::optional<std::uint64_t>{1});
    CHECK_FALSE(s.scan.last_failure.has_value());
}

TEST_CASE("inequality chain for zeta(3)") {
    const ChainSummary s = verify_chain_zeta3(15, kPrec);
    REQUIRE(s.reports.size() == 15);
    for (const BoundReport& r : s.reports) CHECK(r.holds());
    CHECK(s.strictly_decreasing);
    CHECK(s.reports[0].abs_value.mid_fixed(4) == "0.0206");
    CHECK(s.reports[0].bound.mid_fixed(4) == "0.0708");
    CHECK(s.scan.base == 21);
    CHECK(s.scan.last_failure == std::optional<std::uint64_t>{663});
    CHECK(s.scan.crossover == std::optional<std::uint64_t>{664});
}

TEST_CASE("n = 0 is the equality case") {
    const BoundReport r = bound_report(ZetaKind::Three, 0, kPrec);
    CHECK(r.status == BoundStatus::Holds);
    CHECK(r.abs_value.overlaps(r.bound));
}

TEST_CASE("crossover scan against an independent brute force") {
    for (auto kind : {ZetaKind::Two, ZetaKind::Three}) {
        const CrossoverScan s = scan_crossover(kind, 700);
        const unsigned k = power_of(kind);
        const unsigned long base = kind == ZetaKind::Two ? 8 : 21;
        std::optional<std::uint64_t> last;
        BigInt pw = 1;
        for (std::uint64_t n = 1; n <= 700; ++n) {
            pw *= base;
            BigInt dk;
            mpz_pow_ui(dk.get_mpz_t(), dn_iterated_lcm(n).get_mpz_t(), k);
            if (!(dk < pw)) last = n;
        }
        CHECK(s.last_failure == last);
    }
}

TEST_CASE("contradiction thresholds") {
    const ContradictionReport a = contradiction_threshold(ZetaKind::Two, 2, 1);
    CHECK(a.coarse_bound.mid_fixed(2) == "2.41");
    const ContradictionReport b = contradiction_threshold(ZetaKind::Three, 1, 1);
    CHECK(b.coarse_bound.mid_fixed(2) == "1.71");
    const ContradictionReport c = contradiction_threshold(ZetaKind::Two, 100, 7);
    CHECK(c.n_star == 4);
    CHECK(c.product_at_n_star.upper() < Rational(1));
    const ContradictionReport d = contradiction_threshold(ZetaKind::Three, 6, 5);
    CHECK(d.product_at_n_star.upper() < Rational(1));
    CHECK(d.witness == abs(BigInt(5) * d.integers.a + BigInt(6) * d.integers.c));
    // n_star is minimal: the product one step earlier is not below 1.
    const auto product = [](ZetaKind kind, const BigInt& p, unsigned n) {
        const unsigned k = power_of(kind);
        BigInt dk;
        mpz_pow_ui(dk.get_mpz_t(), dn_iterated_lcm(std::max(1U, n)).get_mpz_t(), k);
        return bound_factor(kind, kPrec).ball.pow(n) * Rational(BigInt(p * bound_lead(kind) * dk));
    };
    CHECK_FALSE(product(ZetaKind::Two, 100, 3).upper() < Rational(1));
    CHECK_THROWS_AS(contradiction_threshold(ZetaKind::Two, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(contradiction_threshold(ZetaKind::Two, 0, 1), std::invalid_argument);
}
