#pragma once

#include "beukers/ball.hpp"
#include "beukers/rational.hpp"

#include <utility>

namespace beukers {

/// True value lies in [partial + tail_lo, partial + tail_hi].
struct SeriesEnclosure {
    Rational partial;
    Rational tail_lo;
    Rational tail_hi;
    unsigned long terms = 0;

    Rational lower() const { return partial + tail_lo; }
    Rational upper() const { return partial + tail_hi; }
    Rational width() const { return tail_hi - tail_lo; }
    bool contains(const Rational& x) const { return lower() <= x && x <= upper(); }
    /// Whether the enclosure intersects the ball.
    bool meets(const BallReal& b) const;
    BallReal to_ball(Precision prec) const { return BallReal(lower(), upper(), prec); }
};

/// Exact sum of rationals by pairwise reduction (keeps operand sizes balanced).
Rational tree_sum(std::vector<Rational> terms);

/// sum_{m>=1} 1/((m+r)(m+s)), first K terms.
SeriesEnclosure series_i_rs(unsigned r, unsigned s, unsigned long K);
/// sum_{m>=1} [1/((m+r)^2 (m+s)) + 1/((m+r)(m+s)^2)], first K terms.
SeriesEnclosure series_j_rs(unsigned r, unsigned s, unsigned long K);
/// |I_n| = sum_k C(n+k,n) B(n+k+1,n+1)^2, first K terms.
SeriesEnclosure series_abs_In(unsigned n, unsigned long K);
/// J_n = 2 sum_k A_k B_k, A_k = sum_r a_r/(k+r+1)^2, B_k = sum_r a_r/(k+r+1).
/// Requires K > 2n^2 + n so the tail terms are known to be positive.
SeriesEnclosure series_Jn(unsigned n, unsigned long K);

/// Both sides of int_0^1 P_n(x) x^m dx = ((-1)^n/n!) int_0^1 x^n (1-x)^n (x^m)^{(n)} dx.
std::pair<Rational, Rational> check_ibp(unsigned n, unsigned m);

/// int_0^1 dz/(1-(1-v)z) via its antiderivative, and -ln v/(1-v). Requires 0 < v < 1.
std::pair<BallReal, BallReal> check_substitution(const Rational& v, Precision prec);

/// int_0^1 du/(1-[1-(1-s)t]u) and int_0^1 du/([1-(1-u)s][1-(1-t)u]), each through
/// its antiderivative. Requires 0 < s, t < 1.
std::pair<BallReal, BallReal> check_partial_fraction(const Rational& s, const Rational& t, Precision prec);

/// -ln[(1-s)t] / (1-(1-s)t)
BallReal partial_fraction_closed_form(const Rational& s, const Rational& t, Precision prec);

}  // namespace beukers
