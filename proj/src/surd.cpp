#include "beukers/surd.hpp"

#include <stdexcept>

namespace beukers {

QuadSurd::QuadSurd(const Rational& a, const Rational& b, long radicand) : a_(a), b_(b), d_(radicand) {
    if (radicand < 0) throw std::domain_error("QuadSurd: negative radicand");
    if (b_.sign() != 0 && radicand < 2) throw std::domain_error("QuadSurd: radicand must be >= 2");
    for (long p = 2; p * p <= radicand; ++p) {
        if (radicand % (p * p) == 0) throw std::domain_error("QuadSurd: radicand must be squarefree");
    }
}

long QuadSurd::merge_radicand(const QuadSurd& o) const {
    if (b_.sign() == 0) return o.d_;
    if (o.b_.sign() == 0 || o.d_ == d_) return d_;
    throw std::domain_error("QuadSurd: mixed radicands");
}

int QuadSurd::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with d b^2.
    const Rational diff = a_ * a_ - b_ * b_ * Rational(d_);
    return diff.sign() * sa;
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
    d_ = merge_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) {
    d_ = merge_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
    const long d = merge_radicand(o);
    const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    const Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& o) {
    const Rational n = o.norm();
    if (n.sign() == 0) throw std::domain_error("QuadSurd: division by zero");
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

QuadSurd QuadSurd::pow(unsigned e) const {
    QuadSurd result(Rational(1));
    QuadSurd base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

BallReal QuadSurd::to_ball(Precision prec) const {
    BallReal r(a_, prec);
    if (b_.sign() != 0) r += BallReal(Rational(d_), prec).sqrt() * b_;
    return r;
}

std::string QuadSurd::to_string() const {
    if (b_.sign() == 0) return a_.to_string();
    std::string s;
    if (a_.sign() != 0) s = a_.to_string() + (b_.sign() > 0 ? " + " : " - ");
    else if (b_.sign() < 0) s = "-";
    const Rational mag = b_.abs();
    if (mag != Rational(1)) s += mag.to_string() + "*";
    return s + "sqrt(" + std::to_string(d_) + ")";
}

}  // namespace beukers
