#include "beukers/oracle.hpp"

#include "beukers/legendre.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace beukers {

bool SeriesEnclosure::meets(const BallReal& b) const {
    return !(b.upper() < lower() || upper() < b.lower());
}

Rational tree_sum(std::vector<Rational> terms) {
    if (terms.empty()) return 0;
    while (terms.size() > 1) {
        std::size_t out = 0;
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2) terms[out++] = terms[i] + terms[i + 1];
        if (terms.size() % 2 == 1) terms[out++] = std::move(terms.back());
        terms.resize(out);
    }
    return terms.front();
}

namespace {

void require_terms(unsigned long K) {
    if (K < 1) throw std::domain_error("series: at least one term required");
}

Rational reciprocal(const BigInt& v) { return Rational(BigInt(1), v); }

BigInt upow(unsigned long base, unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

}  // namespace

SeriesEnclosure series_i_rs(unsigned r, unsigned s, unsigned long K) {
    require_terms(K);
    std::vector<Rational> terms;
    terms.reserve(K);
    for (unsigned long m = 1; m <= K; ++m) terms.push_back(reciprocal(BigInt(m + r) * BigInt(m + s)));
    const unsigned long lo = std::min(r, s);
    const unsigned long hi = std::max(r, s);
    SeriesEnclosure e;
    e.partial = tree_sum(std::move(terms));
    e.terms = K;
    // (m+max)^-2 <= term <= (m+min)^-2, integral test on both sides.
    e.tail_lo = reciprocal(BigInt(K + 1 + hi));
    e.tail_hi = reciprocal(BigInt(K + lo));
    return e;
}

SeriesEnclosure series_j_rs(unsigned r, unsigned s, unsigned long K) {
    require_terms(K);
    std::vector<Rational> terms;
    terms.reserve(K);
    for (unsigned long m = 1; m <= K; ++m) {
        const BigInt a = m + r;
        const BigInt b = m + s;
        // 1/(a^2 b) + 1/(a b^2) = (a + b)/(a^2 b^2)
        const BigInt ab = a * b;
        terms.push_back(Rational(a + b, ab * ab));
    }
    const unsigned long lo = std::min(r, s);
    const unsigned long hi = std::max(r, s);
    SeriesEnclosure e;
    e.partial = tree_sum(std::move(terms));
    e.terms = K;
    // 2(m+max)^-3 <= term <= 2(m+min)^-3
    e.tail_lo = reciprocal(upow(K + 1 + hi, 2));
    e.tail_hi = reciprocal(upow(K + lo, 2));
    return e;
}

SeriesEnclosure series_abs_In(unsigned n, unsigned long K) {
    require_terms(K);
    const BigInt nfact = factorial(n);
    std::vector<Rational> terms;
    terms.reserve(K);
    for (unsigned long k = 0; k < K; ++k) {
        // C(n+k, n) = prod_{j=1..n}(k+j) / n!
        BigInt rising = 1;
        for (unsigned j = 1; j <= n; ++j) rising *= k + j;
        // B(n+k+1, n+1) = (n+k)! n! / (2n+k+1)! = n! / prod_{j=n+1..2n+1}(k+j)
        BigInt window = 1;
        for (unsigned j = n + 1; j <= 2 * n + 1; ++j) window *= k + j;
        const Rational binom(rising, nfact);
        const Rational beta(nfact, window);
        terms.push_back(binom * beta * beta);
    }
    SeriesEnclosure e;
    e.partial = tree_sum(std::move(terms));
    e.terms = K;
    // term_k <= n!/(k+n+1)^{n+2}; sum over k >= K is at most n!/((n+1)(K+n)^{n+1}).
    e.tail_hi = Rational(nfact, BigInt(n + 1) * upow(K + n, n + 1));
    e.tail_lo = n == 0 ? reciprocal(BigInt(K + 1)) : Rational(0);
    return e;
}

SeriesEnclosure series_Jn(unsigned n, unsigned long K) {
    require_terms(K);
    if (K <= 2UL * n * n + n) {
        throw std::domain_error("series_Jn: K must exceed 2n^2+n, got K=" + std::to_string(K));
    }
    const PolyZ p = legendre_binomial(n);
    std::vector<Rational> terms;
    terms.reserve(K);
    for (unsigned long k = 0; k < K; ++k) {
        Rational a = 0;
        Rational b = 0;
        for (unsigned r = 0; r < p.size(); ++r) {
            const BigInt d = k + r + 1;
            a += Rational(p[r], d * d);
            b += Rational(p[r], d);
        }
        terms.push_back(Rational(2) * a * b);
    }
    SeriesEnclosure e;
    e.partial = tree_sum(std::move(terms));
    e.terms = K;
    // For k > 2n^2+n, 0 <= 2 A_k B_k <= 2/(k+1)^3.
    e.tail_lo = 0;
    e.tail_hi = reciprocal(upow(K, 2));
    return e;
}

std::pair<Rational, Rational> check_ibp(unsigned n, unsigned m) {
    if (m < n) throw std::domain_error("check_ibp: requires m >= n");
    const PolyZ p = legendre_binomial(n);
    Rational lhs = 0;
    for (unsigned k = 0; k < p.size(); ++k) lhs += Rational(p[k], BigInt(m + k + 1));

    // (x^m)^{(n)} = m!/(m-n)! x^{m-n}; int x^m (1-x)^n = B(m+1, n+1) = m! n! / (m+n+1)!
    const Rational falling(factorial(m), factorial(m - n));
    const Rational beta(factorial(m) * factorial(n), factorial(m + n + 1));
    Rational rhs = falling * beta / Rational(factorial(n));
    if (n % 2 == 1) rhs = -rhs;
    return {lhs, rhs};
}

namespace {

void require_unit_open(const Rational& v, const char* what) {
    if (v <= Rational(0) || v >= Rational(1)) {
        throw std::domain_error(std::string(what) + ": argument " + v.to_string() + " outside (0, 1)");
    }
}

}  // namespace

std::pair<BallReal, BallReal> check_substitution(const Rational& v, Precision prec) {
    require_unit_open(v, "check_substitution");
    const BallReal one(Rational(1), prec);
    const BallReal slope(Rational(1) - v, prec);
    // F(z) = -ln(1 - (1-v) z)/(1-v)
    auto antiderivative = [&](const Rational& z) { return -(one - slope * z).log() / slope; };
    BallReal lhs = antiderivative(Rational(1)) - antiderivative(Rational(0));
    BallReal rhs = -BallReal(v, prec).log() / slope;
    return {lhs, rhs};
}

std::pair<BallReal, BallReal> check_partial_fraction(const Rational& s, const Rational& t, Precision prec) {
    require_unit_open(s, "check_partial_fraction");
    require_unit_open(t, "check_partial_fraction");
    const Rational c = Rational(1) - (Rational(1) - s) * t;
    const BallReal cb(c, prec);

    // int du/(1 - c u) = [-ln(1 - c u)/c]_0^1
    BallReal lhs = (-BallReal(Rational(1) - c, prec).log() + BallReal(Rational(1), prec).log()) / cb;

    // 1/(alpha beta) = (s/c)/alpha + ((1-t)/c)/beta with alpha = 1-(1-u)s, beta = 1-(1-t)u.
    auto alpha = [&](const Rational& u) { return BallReal(Rational(1) - (Rational(1) - u) * s, prec); };
    auto beta = [&](const Rational& u) { return BallReal(Rational(1) - (Rational(1) - t) * u, prec); };
    BallReal rhs = (alpha(1).log() - alpha(0).log() - beta(1).log() + beta(0).log()) / cb;
    return {lhs, rhs};
}

BallReal partial_fraction_closed_form(const Rational& s, const Rational& t, Precision prec) {
    require_unit_open(s, "partial_fraction_closed_form");
    require_unit_open(t, "partial_fraction_closed_form");
    const Rational w = (Rational(1) - s) * t;
    return -BallReal(w, prec).log() / BallReal(Rational(1) - w, prec);
}

}  // namespace beukers
