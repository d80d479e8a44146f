#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beukers/constants.hpp"
#include "beukers/forms.hpp"
#include "beukers/oracle.hpp"

using namespace beukers;

namespace {
const Precision kPrec(40);
const Rational kWidth(1, 100000000);
}  // namespace

TEST_CASE("tree sum") {
    CHECK(tree_sum({}) == Rational(0));
    CHECK(tree_sum({Rational(1, 2)}) == Rational(1, 2));
    std::vector<Rational> terms;
    for (long m = 1; m <= 100; ++m) terms.emplace_back(BigInt(1), BigInt(m * (m + 1)));
    CHECK(tree_sum(terms) == Rational(100, 101));
}

TEST_CASE("series for the base integrals agree with closed forms") {
    for (unsigned r = 0; r <= 4; ++r) {
        for (unsigned s = 0; s <= 4; ++s) {
            CAPTURE(r);
            CAPTURE(s);
            const SeriesEnclosure si = series_i_rs(r, s, 4000);
            const SeriesEnclosure sj = series_j_rs(r, s, 4000);
            CHECK(si.tail_lo <= si.tail_hi);
            CHECK(si.meets(i_rs(r, s).realize(kPrec)));
            CHECK(sj.meets(j_rs(r, s).realize(kPrec)));
            if (r != s) {
                CHECK(si.contains(i_rs(r, s).rat));
                CHECK(sj.contains(j_rs(r, s).rat));
            }
        }
    }
    // Telescoping example: sum 1/(m(m+1)) = 1.
    CHECK(series_i_rs(1, 0, 50).contains(Rational(1)));
}

TEST_CASE("series for |I_n| and J_n agree with the assembled forms") {
    for (unsigned n = 0; n <= 6; ++n) {
        CAPTURE(n);
        const SeriesEnclosure si = series_abs_In(n, 20000);
        const SeriesEnclosure sj = series_Jn(n, 20000);
        CHECK(si.width() <= kWidth);
        CHECK(sj.width() <= kWidth);
        CHECK(si.meets(beukers_I(n).realize(kPrec).abs()));
        CHECK(sj.meets(beukers_J(n).realize(kPrec)));
    }
}

TEST_CASE("frozen J_2 agrees with its series") {
    const LinearForm j2{ZetaKind::Three, Rational(-351, 2), BigInt(146)};
    CHECK(series_Jn(2, 20000).meets(j2.realize(kPrec)));
    // A neighbouring form must be rejected, so the check has teeth.
    const LinearForm off{ZetaKind::Three, Rational(-350, 2), BigInt(146)};
    CHECK_FALSE(series_Jn(2, 20000).meets(off.realize(kPrec)));
}

TEST_CASE("J_n series needs enough terms for positive tails") {
    CHECK_THROWS(series_Jn(3, 21));
    CHECK_NOTHROW(series_Jn(3, 22));
}

TEST_CASE("integration by parts identity") {
    for (unsigned m = 0; m <= 12; ++m) {
        for (unsigned n = 0; n <= m; ++n) {
            const auto [lhs, rhs] = check_ibp(n, m);
            CHECK(lhs == rhs);
        }
    }
    CHECK_THROWS(check_ibp(3, 2));
    // m = n gives the leading coefficient times the beta integral.
    CHECK(check_ibp(2, 2).first == Rational(1, 30));
}

TEST_CASE("substitution identity") {
    for (const Rational& v : {Rational(1, 2), Rational(1, 100), Rational(99, 100), Rational(2, 7)}) {
        const auto [lhs, rhs] = check_substitution(v, kPrec);
        CHECK(lhs.overlaps(rhs));
        CHECK(lhs.rad() < kWidth);
    }
    CHECK_THROWS_AS(check_substitution(Rational(0), kPrec), std::domain_error);
    CHECK_THROWS_AS(check_substitution(Rational(1), kPrec), std::domain_error);
}

TEST_CASE("partial fraction identity") {
    for (const Rational& s : {Rational(1, 3), Rational(1, 2), Rational(9, 10)}) {
        for (const Rational& t : {Rational(1, 5), Rational(1, 2), Rational(7, 8)}) {
            const auto [lhs, rhs] = check_partial_fraction(s, t, kPrec);
            CHECK(lhs.overlaps(rhs));
            CHECK(lhs.overlaps(partial_fraction_closed_form(s, t, kPrec)));
        }
    }
    CHECK_THROWS_AS(check_partial_fraction(Rational(0), Rational(1, 2), kPrec), std::domain_error);
}
