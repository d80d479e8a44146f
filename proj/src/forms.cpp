#include "beukers/forms.hpp"

#include "beukers/arith.hpp"
#include "beukers/constants.hpp"

#include <algorithm>
#include <string>

namespace beukers {

ZetaKind zeta_kind_from_int(int k) {
    if (k == 2) return ZetaKind::Two;
    if (k == 3) return ZetaKind::Three;
    throw std::invalid_argument("zeta kind must be 2 or 3, got " + std::to_string(k));
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    if (kind != o.kind) throw std::invalid_argument("LinearForm: mixed zeta kinds");
    rat += o.rat;
    zcoef += o.zcoef;
    return *this;
}

LinearForm operator*(const BigInt& c, const LinearForm& f) {
    return LinearForm{f.kind, Rational(c) * f.rat, c * f.zcoef};
}

BallReal LinearForm::realize(const BallReal& zeta) const {
    return BallReal(rat, zeta.precision()) + zeta * Rational(zcoef);
}

BallReal LinearForm::realize(Precision prec) const { return realize(zeta_ref(power_of(kind), prec)); }

namespace {

// Diagonal and off-diagonal closed forms, sharing a cumulative table of
// partial sums sum_{m<=r} m^-order.
class BaseForms {
public:
    BaseForms(ZetaKind kind, unsigned max_index)
        : kind_(kind),
          h_(harmonic_table(max_index, kind == ZetaKind::Two ? 1 : 2)),
          diag_(harmonic_table(max_index, power_of(kind))) {}

    LinearForm operator()(unsigned r, unsigned s) const {
        if (r == s) {
            // zeta(2) - sum 1/m^2, or 2 zeta(3) - 2 sum 1/m^3
            const long scale = kind_ == ZetaKind::Two ? 1 : 2;
            return LinearForm{kind_, -Rational(scale) * diag_[r], BigInt(scale)};
        }
        const Rational diff = h_[std::max(r, s)] - h_[std::min(r, s)];
        return LinearForm{kind_, diff / Rational(static_cast<long>(std::max(r, s) - std::min(r, s))), BigInt(0)};
    }

private:
    ZetaKind kind_;
    std::vector<Rational> h_;
    std::vector<Rational> diag_;
};

}  // namespace

LinearForm i_rs(unsigned r, unsigned s) { return BaseForms(ZetaKind::Two, std::max(r, s))(r, s); }
LinearForm j_rs(unsigned r, unsigned s) { return BaseForms(ZetaKind::Three, std::max(r, s))(r, s); }

LinearForm bilinear(ZetaKind kind, const PolyZ& r_poly, const PolyZ& s_poly) {
    LinearForm acc{kind, Rational(0), BigInt(0)};
    if (r_poly.size() == 0 || s_poly.size() == 0) return acc;
    const auto top = static_cast<unsigned>(std::max(r_poly.size(), s_poly.size()) - 1);
    const BaseForms base(kind, top);
    for (unsigned r = 0; r < r_poly.size(); ++r) {
        if (r_poly[r] == 0) continue;
        for (unsigned s = 0; s < s_poly.size(); ++s) {
            if (s_poly[s] == 0) continue;
            acc += BigInt(r_poly[r] * s_poly[s]) * base(r, s);
        }
    }
    return acc;
}

LinearForm beukers_I(unsigned n) { return bilinear(ZetaKind::Two, legendre_binomial(n), one_minus_x_pow(n)); }

LinearForm beukers_J(unsigned n) {
    const PolyZ p = legendre_binomial(n);
    return bilinear(ZetaKind::Three, p, p);
}

LinearForm beukers_form(ZetaKind kind, unsigned n) { return kind == ZetaKind::Two ? beukers_I(n) : beukers_J(n); }

IntegerForm integerize(const LinearForm& form, unsigned n) {
    IntegerForm out;
    out.n = n;
    out.kind = form.kind;
    out.dn = dn_iterated_lcm(std::max(1U, n));
    mpz_pow_ui(out.d_power.get_mpz_t(), out.dn.get_mpz_t(), power_of(form.kind));
    const Rational scaled = form.rat * Rational(out.d_power);
    if (!scaled.is_integer()) {
        throw IntegralityError("integerize: d_" + std::to_string(n) + "^" + std::to_string(power_of(form.kind)) +
                               " * " + form.rat.to_string() + " is not an integer");
    }
    out.a = scaled.numerator();
    out.b = form.zcoef;
    out.c = out.b * out.d_power;
    return out;
}

}  // namespace beukers
