#pragma once

#include "beukers/ball.hpp"
#include "beukers/rational.hpp"

#include <string>

namespace beukers {

/// Exact element a + b*sqrt(d) of the real quadratic field Q(sqrt d).
///
/// Only arithmetic inside one field is supported; mixing radicands throws
/// (a surd with b == 0 is a plain rational and mixes with anything).
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadSurd(const Rational& a, const Rational& b, long radicand);

    static QuadSurd sqrt_of(long radicand) { return QuadSurd(0, 1, radicand); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    long radicand() const { return d_; }

    QuadSurd conjugate() const { return QuadSurd(a_, -b_, d_); }
    /// a^2 - d b^2
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }
    int sign() const;
    bool is_zero() const { return a_.sign() == 0 && b_.sign() == 0; }

    QuadSurd& operator+=(const QuadSurd& o);
    QuadSurd& operator-=(const QuadSurd& o);
    QuadSurd& operator*=(const QuadSurd& o);
    QuadSurd& operator/=(const QuadSurd& o);

    friend QuadSurd operator+(QuadSurd x, const QuadSurd& y) { return x += y; }
    friend QuadSurd operator-(QuadSurd x, const QuadSurd& y) { return x -= y; }
    friend QuadSurd operator*(QuadSurd x, const QuadSurd& y) { return x *= y; }
    friend QuadSurd operator/(QuadSurd x, const QuadSurd& y) { return x /= y; }
    friend QuadSurd operator-(const QuadSurd& x) { return QuadSurd(-x.a_, -x.b_, x.d_); }

    friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x - y).is_zero(); }
    friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadSurd& x, const QuadSurd& y) { return y < x; }

    QuadSurd pow(unsigned e) const;
    BallReal to_ball(Precision prec) const;
    /// Human-readable form such as "-11/2 + 5/2*sqrt(5)".
    std::string to_string() const;

private:
    long merge_radicand(const QuadSurd& o) const;

    Rational a_;
    Rational b_;
    long d_ = 0;
};

}  // namespace beukers
