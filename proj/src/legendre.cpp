#include "beukers/legendre.hpp"

#include <stdexcept>

namespace beukers {

PolyZ::PolyZ(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyZ::PolyZ(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void PolyZ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyZ::eval(const Rational& x) const {
    // Horner.
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

BigInt PolyZ::abs_sum() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += ::abs(c);
    return s;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return PolyZ();
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return PolyZ(std::move(out));
}

PolyZ operator*(const BigInt& c, const PolyZ& p) {
    std::vector<BigInt> out = p.coeffs_;
    for (auto& x : out) x *= c;
    return PolyZ(std::move(out));
}

PolyZ legendre_binomial(unsigned n) {
    std::vector<BigInt> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        c[k] = binomial(n, k) * binomial(n + k, n);
        if (k % 2 == 1) c[k] = -c[k];
    }
    return PolyZ(std::move(c));
}

PolyZ one_minus_x_pow(unsigned n) {
    std::vector<BigInt> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        c[k] = binomial(n, k);
        if (k % 2 == 1) c[k] = -c[k];
    }
    return PolyZ(std::move(c));
}

PolyZ derivative(const PolyZ& p) {
    if (p.size() <= 1) return PolyZ();
    std::vector<BigInt> out(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * static_cast<unsigned long>(k);
    return PolyZ(std::move(out));
}

PolyZ legendre_rodrigues(unsigned n) {
    PolyZ w{1};
    const PolyZ x{0, 1};
    const PolyZ one_minus_x{1, -1};
    for (unsigned i = 0; i < n; ++i) w = w * x * one_minus_x;
    for (unsigned i = 0; i < n; ++i) w = derivative(w);

    const BigInt nfact = factorial(n);
    std::vector<BigInt> c = w.coeffs();
    for (auto& v : c) {
        if (!mpz_divisible_p(v.get_mpz_t(), nfact.get_mpz_t())) {
            throw std::logic_error("legendre_rodrigues: coefficient not divisible by n!");
        }
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), nfact.get_mpz_t());
    }
    return PolyZ(std::move(c));
}

PolyZ reflect(const PolyZ& p) {
    // p(1-x) = sum_k c_k (1-x)^k
    std::vector<BigInt> out(p.size(), BigInt(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
        const PolyZ term = one_minus_x_pow(static_cast<unsigned>(k));
        for (std::size_t i = 0; i < term.size(); ++i) out[i] += p[k] * term[i];
    }
    return PolyZ(std::move(out));
}

Rational eval_rational(const PolyZ& p, const Rational& x) { return p.eval(x); }

}  // namespace beukers
