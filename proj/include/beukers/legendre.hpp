#pragma once

#include "beukers/rational.hpp"

#include <vector>

namespace beukers {

/// Polynomial with big-integer coefficients, ascending powers.
class PolyZ {
public:
    PolyZ() = default;
    explicit PolyZ(std::vector<BigInt> coeffs);
    PolyZ(std::initializer_list<long> coeffs);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }

    Rational eval(const Rational& x) const;
    /// Sum of |coefficients|.
    BigInt abs_sum() const;

    friend bool operator==(const PolyZ&, const PolyZ&) = default;
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator*(const BigInt& c, const PolyZ& p);

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// P_n(x) = sum_k (-1)^k C(n,k) C(n+k,n) x^k.
PolyZ legendre_binomial(unsigned n);
/// P_n(x) = (1/n!) d^n/dx^n [x^n (1-x)^n], expanded and differentiated coefficient-wise.
/// Throws std::logic_error if the division by n! is ever inexact.
PolyZ legendre_rodrigues(unsigned n);
PolyZ derivative(const PolyZ& p);
/// Coefficients of p(1 - x).
PolyZ reflect(const PolyZ& p);
/// (1 - x)^n.
PolyZ one_minus_x_pow(unsigned n);
/// Exact p(x).
Rational eval_rational(const PolyZ& p, const Rational& x);

}  // namespace beukers
