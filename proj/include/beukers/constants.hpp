#pragma once

#include "beukers/ball.hpp"
#include "beukers/surd.hpp"

#include <vector>

namespace beukers {

/// An algebraic constant known exactly and as an enclosure.
struct SurdConstant {
    QuadSurd exact;
    BallReal ball;
};

/// Enclosure of sum_{m>=1} m^-s (s >= 2) with radius below 10^-prec.
///
/// The first `terms` terms are summed exactly; the tail is bracketed by two
/// consecutive Euler-Maclaurin truncations, which for x^-s straddle the true
/// tail. With zero correction terms this is the integral-test bracket.
struct ZetaEnclosure {
    Rational partial;
    Rational tail_lo;
    Rational tail_hi;
    unsigned long terms = 0;
    unsigned corrections = 0;
};

ZetaEnclosure zeta_enclosure(unsigned s, Precision prec);
BallReal zeta_ref(unsigned s, Precision prec);
BallReal zeta2_ref(Precision prec);
BallReal zeta3_ref(Precision prec);

/// Phi^5 = (5 sqrt5 - 11)/2 with Phi = (sqrt5 - 1)/2.
SurdConstant const_phi5(Precision prec);
/// Phi = (sqrt5 - 1)/2.
SurdConstant const_phi(Precision prec);
/// 17 - 12 sqrt2.
SurdConstant const_delta3(Precision prec);

/// Bernoulli numbers B_0..B_m (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(unsigned m);

}  // namespace beukers
