#include "beukers/constants.hpp"

#include <algorithm>
#include <stdexcept>

namespace beukers {

std::vector<Rational> bernoulli_numbers(unsigned m) {
    std::vector<Rational> b(m + 1);
    b[0] = 1;
    for (unsigned k = 1; k <= m; ++k) {
        Rational acc = 0;
        for (unsigned j = 0; j < k; ++j) acc += Rational(binomial(k + 1, j)) * b[j];
        b[k] = -acc / Rational(static_cast<long>(k + 1));
    }
    return b;
}

namespace {

Rational inverse_power(unsigned long base, unsigned long e) {
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), base, e);
    return Rational(BigInt(1), den);
}

// Euler-Maclaurin correction term j for sum_{m>=N} m^-s:
// B_{2j} (s)_{2j-1} / ((2j)! N^{s+2j-1}).
Rational correction(const std::vector<Rational>& bern, unsigned s, unsigned long n, unsigned j) {
    BigInt rising = 1;
    for (unsigned i = 0; i < 2 * j - 1; ++i) rising *= s + i;
    return bern[2 * j] * Rational(rising, factorial(2 * j)) * inverse_power(n, s + 2 * j - 1);
}

}  // namespace

ZetaEnclosure zeta_enclosure(unsigned s, Precision prec) {
    if (s < 2) throw std::domain_error("zeta_enclosure: s >= 2 required");
    // Half the allowed width, leaving room for outward rounding.
    const Rational target = inverse_power(10, static_cast<unsigned long>(prec.digits())) / Rational(4);

    unsigned long terms = std::max(20, prec.digits());
    for (;;) {
        const unsigned long n = terms + 1;
        // Corrections shrink while 2j stays well below 2*pi*N.
        const unsigned max_j = static_cast<unsigned>(std::min<unsigned long>(n, 200));
        const auto bern = bernoulli_numbers(2 * max_j + 2);

        // T_0 = N^{1-s}/(s-1) + N^{-s}/2
        Rational tail = inverse_power(n, s - 1) / Rational(static_cast<long>(s - 1)) + inverse_power(n, s) / Rational(2);
        for (unsigned j = 1; j <= max_j; ++j) {
            const Rational next = correction(bern, s, n, j);
            if (next.abs() < target) {
                ZetaEnclosure out;
                out.terms = terms;
                out.corrections = j - 1;
                for (unsigned long m = terms; m >= 1; --m) out.partial += inverse_power(m, s);
                out.tail_lo = std::min(tail, tail + next);
                out.tail_hi = std::max(tail, tail + next);
                return out;
            }
            tail += next;
        }
        terms *= 2;
    }
}

BallReal zeta_ref(unsigned s, Precision prec) {
    const ZetaEnclosure z = zeta_enclosure(s, prec);
    return BallReal(z.partial + z.tail_lo, z.partial + z.tail_hi, prec);
}

BallReal zeta2_ref(Precision prec) { return zeta_ref(2, prec); }
BallReal zeta3_ref(Precision prec) { return zeta_ref(3, prec); }

SurdConstant const_phi(Precision prec) {
    QuadSurd phi(Rational(-1, 2), Rational(1, 2), 5);
    return {phi, phi.to_ball(prec)};
}

SurdConstant const_phi5(Precision prec) {
    QuadSurd v(Rational(-11, 2), Rational(5, 2), 5);
    return {v, v.to_ball(prec)};
}

SurdConstant const_delta3(Precision prec) {
    QuadSurd v(Rational(17), Rational(-12), 2);
    return {v, v.to_ball(prec)};
}

}  // namespace beukers
