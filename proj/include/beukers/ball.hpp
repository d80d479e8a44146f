#pragma once

#include "beukers/rational.hpp"

#include <mpfr.h>

#include <string>

namespace beukers {

/// Working precision in decimal digits.
class Precision {
public:
    static constexpr int kMinDigits = 15;
    static constexpr int kDefaultDigits = 50;

    constexpr Precision() = default;
    explicit Precision(int digits);

    int digits() const { return digits_; }
    /// Binary working precision: digits * log2(10) plus guard bits.
    mpfr_prec_t bits() const;

    friend bool operator==(Precision, Precision) = default;

private:
    int digits_ = kDefaultDigits;
};

/// Rigorous enclosure of a real number.
///
/// Stored as outward-rounded endpoints [lo, hi]; mid() and rad() describe the
/// same set as a ball. Every operation returns an enclosure of all pointwise
/// results over its inputs.
class BallReal {
public:
    explicit BallReal(Precision prec = Precision());
    BallReal(const Rational& value, Precision prec);
    /// Smallest representable enclosure of [lo, hi]; requires lo <= hi.
    BallReal(const Rational& lo, const Rational& hi, Precision prec);

    BallReal(const BallReal& other);
    BallReal(BallReal&& other) noexcept;
    BallReal& operator=(const BallReal& other);
    BallReal& operator=(BallReal&& other) noexcept;
    ~BallReal();

    Precision precision() const { return prec_; }

    Rational lower() const;
    Rational upper() const;
    /// Exact midpoint and half-width of the stored endpoints.
    Rational mid() const;
    Rational rad() const;
    double to_double() const;

    bool contains(const Rational& x) const;
    bool contains(const BallReal& other) const;
    bool overlaps(const BallReal& other) const;
    bool contains_zero() const { return contains(Rational(0)); }
    /// True when every point of *this is < every point of other.
    bool certainly_less(const BallReal& other) const;
    bool certainly_positive() const;
    bool certainly_negative() const;

    BallReal& operator+=(const BallReal& o);
    BallReal& operator-=(const BallReal& o);
    BallReal& operator*=(const BallReal& o);
    BallReal& operator/=(const BallReal& o);

    friend BallReal operator+(BallReal a, const BallReal& b) { return a += b; }
    friend BallReal operator-(BallReal a, const BallReal& b) { return a -= b; }
    friend BallReal operator*(BallReal a, const BallReal& b) { return a *= b; }
    friend BallReal operator/(BallReal a, const BallReal& b) { return a /= b; }
    friend BallReal operator-(const BallReal& a);

    BallReal operator+(const Rational& r) const { return *this + BallReal(r, prec_); }
    BallReal operator-(const Rational& r) const { return *this - BallReal(r, prec_); }
    BallReal operator*(const Rational& r) const { return *this * BallReal(r, prec_); }
    BallReal operator/(const Rational& r) const { return *this / BallReal(r, prec_); }

    BallReal abs() const;
    BallReal sqrt() const;
    BallReal log() const;
    BallReal pow(unsigned e) const;

    /// Midpoint in scientific notation with the given significant digits.
    std::string mid_string(int digits) const;
    /// Midpoint in fixed notation with the given digits after the point.
    std::string mid_fixed(int decimals) const;
    /// "[lo, hi]" with the given significant digits, rounded outward.
    std::string interval_string(int digits) const;

    static BallReal pi(Precision prec);

private:
    void set_zero();
    static mpfr_prec_t join_bits(const BallReal& a, const BallReal& b);
    void widen_to(mpfr_prec_t bits);

    Precision prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace beukers
