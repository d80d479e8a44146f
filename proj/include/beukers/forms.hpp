#pragma once

#include "beukers/ball.hpp"
#include "beukers/legendre.hpp"
#include "beukers/rational.hpp"

#include <stdexcept>
#include <vector>

namespace beukers {

/// Which zeta value a linear form refers to.
enum class ZetaKind : unsigned { Two = 2, Three = 3 };

ZetaKind zeta_kind_from_int(int k);
inline unsigned power_of(ZetaKind k) { return static_cast<unsigned>(k); }

/// Exact value rat + zcoef * zeta(kind).
struct LinearForm {
    ZetaKind kind = ZetaKind::Two;
    Rational rat;
    BigInt zcoef = 0;

    LinearForm& operator+=(const LinearForm& o);
    friend LinearForm operator*(const BigInt& c, const LinearForm& f);
    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.kind == b.kind && a.rat == b.rat && a.zcoef == b.zcoef;
    }

    /// Substitutes an enclosure of zeta(kind).
    BallReal realize(const BallReal& zeta) const;
    /// Substitutes the reference enclosure at the given precision.
    BallReal realize(Precision prec) const;
};

/// a_n, b_n, c_n with rat = a / d_n^k, c = b d_n^k.
struct IntegerForm {
    unsigned n = 0;
    ZetaKind kind = ZetaKind::Two;
    BigInt a;
    BigInt b;
    BigInt c;
    BigInt dn;
    BigInt d_power;
};

/// Raised when a form that must be integral after scaling is not.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Integral over the unit square of x^r y^s / (1 - xy).
LinearForm i_rs(unsigned r, unsigned s);
/// Integral over the unit square of -x^r y^s ln(xy) / (1 - xy).
LinearForm j_rs(unsigned r, unsigned s);

/// sum_{r,s} R_r S_s * base(r, s), with base i_rs or j_rs.
LinearForm bilinear(ZetaKind kind, const PolyZ& r_poly, const PolyZ& s_poly);

/// Integral of P_n(x) (1-y)^n / (1 - xy).
LinearForm beukers_I(unsigned n);
/// Integral of -P_n(x) P_n(y) ln(xy) / (1 - xy).
LinearForm beukers_J(unsigned n);
LinearForm beukers_form(ZetaKind kind, unsigned n);

/// Scales by d_n^k. Throws IntegralityError when the result is not integral.
IntegerForm integerize(const LinearForm& form, unsigned n);

}  // namespace beukers
