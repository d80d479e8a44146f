#include "beukers/ball.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace beukers {

namespace {

// Scratch MPFR value with RAII.
class Scratch {
public:
    explicit Scratch(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;
    ~Scratch() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

Rational to_rational(mpfr_srcptr x) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    return Rational(q);
}

std::string format(const char* fmt, int digits, mpfr_srcptr x) {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, fmt, digits - 1, x) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

}  // namespace

Precision::Precision(int digits) : digits_(digits) {
    if (digits < kMinDigits) {
        throw std::domain_error("Precision: at least " + std::to_string(kMinDigits) + " digits required");
    }
}

mpfr_prec_t Precision::bits() const {
    return static_cast<mpfr_prec_t>(std::ceil(digits_ * 3.3219280948873623)) + 32;
}

BallReal::BallReal(Precision prec) : prec_(prec) {
    mpfr_init2(lo_, prec_.bits());
    mpfr_init2(hi_, prec_.bits());
    set_zero();
}

BallReal::BallReal(const Rational& value, Precision prec) : prec_(prec) {
    mpfr_init2(lo_, prec_.bits());
    mpfr_init2(hi_, prec_.bits());
    mpfr_set_q(lo_, value.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, value.raw().get_mpq_t(), MPFR_RNDU);
}

BallReal::BallReal(const Rational& lo, const Rational& hi, Precision prec) : prec_(prec) {
    if (hi < lo) throw std::invalid_argument("BallReal: lower endpoint above upper endpoint");
    mpfr_init2(lo_, prec_.bits());
    mpfr_init2(hi_, prec_.bits());
    mpfr_set_q(lo_, lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.raw().get_mpq_t(), MPFR_RNDU);
}

BallReal::BallReal(const BallReal& other) : prec_(other.prec_) {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

BallReal::BallReal(BallReal&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

BallReal& BallReal::operator=(const BallReal& other) {
    if (this == &other) return *this;
    prec_ = other.prec_;
    mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
    return *this;
}

BallReal& BallReal::operator=(BallReal&& other) noexcept {
    prec_ = other.prec_;
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

BallReal::~BallReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void BallReal::set_zero() {
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

mpfr_prec_t BallReal::join_bits(const BallReal& a, const BallReal& b) {
    return std::max(mpfr_get_prec(a.lo_), mpfr_get_prec(b.lo_));
}

void BallReal::widen_to(mpfr_prec_t bits) {
    // Raising precision is exact.
    if (mpfr_get_prec(lo_) < bits) mpfr_prec_round(lo_, bits, MPFR_RNDD);
    if (mpfr_get_prec(hi_) < bits) mpfr_prec_round(hi_, bits, MPFR_RNDU);
}

Rational BallReal::lower() const { return to_rational(lo_); }
Rational BallReal::upper() const { return to_rational(hi_); }
Rational BallReal::mid() const { return (lower() + upper()) / Rational(2); }
Rational BallReal::rad() const { return (upper() - lower()) / Rational(2); }

double BallReal::to_double() const {
    Scratch m(mpfr_get_prec(lo_) + 1);
    mpfr_add(m.get(), lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return mpfr_get_d(m.get(), MPFR_RNDN);
}

bool BallReal::contains(const Rational& x) const {
    return mpfr_cmp_q(lo_, x.raw().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.raw().get_mpq_t()) >= 0;
}

bool BallReal::contains(const BallReal& other) const {
    return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
}

bool BallReal::overlaps(const BallReal& other) const {
    return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

bool BallReal::certainly_less(const BallReal& other) const { return mpfr_less_p(hi_, other.lo_); }
bool BallReal::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool BallReal::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

BallReal& BallReal::operator+=(const BallReal& o) {
    widen_to(join_bits(*this, o));
    if (o.prec_.digits() > prec_.digits()) prec_ = o.prec_;
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
}

BallReal& BallReal::operator-=(const BallReal& o) {
    widen_to(join_bits(*this, o));
    if (o.prec_.digits() > prec_.digits()) prec_ = o.prec_;
    const mpfr_prec_t bits = mpfr_get_prec(lo_);
    Scratch lo(bits), hi(bits);
    mpfr_sub(lo.get(), lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(hi.get(), hi_, o.lo_, MPFR_RNDU);
    mpfr_swap(lo_, lo.get());
    mpfr_swap(hi_, hi.get());
    return *this;
}

BallReal& BallReal::operator*=(const BallReal& o) {
    widen_to(join_bits(*this, o));
    if (o.prec_.digits() > prec_.digits()) prec_ = o.prec_;
    const mpfr_prec_t bits = mpfr_get_prec(lo_);
    Scratch lo(bits), hi(bits), t(bits);
    mpfr_srcptr a[2] = {lo_, hi_};
    mpfr_srcptr b[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto x : a) {
        for (auto y : b) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    mpfr_swap(lo_, lo.get());
    mpfr_swap(hi_, hi.get());
    return *this;
}

BallReal& BallReal::operator/=(const BallReal& o) {
    if (o.contains_zero()) throw std::domain_error("BallReal: divisor encloses zero");
    widen_to(join_bits(*this, o));
    if (o.prec_.digits() > prec_.digits()) prec_ = o.prec_;
    const mpfr_prec_t bits = mpfr_get_prec(lo_);
    Scratch lo(bits), hi(bits), t(bits);
    mpfr_srcptr a[2] = {lo_, hi_};
    mpfr_srcptr b[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto x : a) {
        for (auto y : b) {
            mpfr_div(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
            mpfr_div(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    mpfr_swap(lo_, lo.get());
    mpfr_swap(hi_, hi.get());
    return *this;
}

BallReal operator-(const BallReal& a) {
    BallReal r(a);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

BallReal BallReal::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    BallReal r(*this);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_less_p(r.hi_, hi_)) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    mpfr_set_zero(r.lo_, 1);
    return r;
}

BallReal BallReal::sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw std::domain_error("BallReal: sqrt of a negative enclosure");
    BallReal r(*this);
    if (mpfr_sgn(lo_) < 0) {
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

BallReal BallReal::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("BallReal: log of an enclosure touching zero");
    BallReal r(*this);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

BallReal BallReal::pow(unsigned e) const {
    if (e == 0) return BallReal(Rational(1), prec_);
    // x^e is monotone on [0, inf) and, for odd e, on the whole line.
    BallReal base = (e % 2 == 0) ? abs() : *this;
    BallReal r(base);
    mpfr_pow_ui(r.lo_, base.lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, base.hi_, e, MPFR_RNDU);
    return r;
}

std::string BallReal::mid_string(int digits) const {
    Scratch m(mpfr_get_prec(lo_) + 1);
    mpfr_add(m.get(), lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return format("%.*Re", digits, m.get());
}

std::string BallReal::mid_fixed(int decimals) const {
    Scratch m(mpfr_get_prec(lo_) + 1);
    mpfr_add(m.get(), lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return format("%.*Rf", decimals + 1, m.get());
}

std::string BallReal::interval_string(int digits) const {
    return "[" + format("%.*RDe", digits, lo_) + ", " + format("%.*RUe", digits, hi_) + "]";
}

BallReal BallReal::pi(Precision prec) {
    BallReal r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

}  // namespace beukers
