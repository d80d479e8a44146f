#include "beukers/rational.hpp"

namespace beukers {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text, 10));
        return Rational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned e) const {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(mpq_class(num, den));
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    // C(n, i) = C(n, i-1) * (n-i+1) / i, exact at every step.
    BigInt c = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        c *= n - i + 1;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i);
    }
    return c;
}

BigInt factorial(unsigned long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace beukers
