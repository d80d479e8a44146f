#include "beukers/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace beukers {

PrimeTable sieve(std::uint64_t limit) { return PrimeTable(limit); }

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::domain_error("sieve: limit must be >= 2");
    // composite[i] marks the odd number 2i+1.
    const std::uint64_t half = (limit - 1) / 2 + 1;
    std::vector<bool> composite(half, false);
    for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        for (std::uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
    }
    primes_.reserve(limit < 100 ? 25 : static_cast<std::size_t>(1.26 * limit / std::log(limit)));
    primes_.push_back(2);
    for (std::uint64_t i = 1; i < half; ++i) {
        if (!composite[i]) primes_.push_back(2 * i + 1);
    }
}

std::uint64_t PrimeTable::prime_count(std::uint64_t n) const {
    if (n > limit_) {
        throw std::out_of_range("prime_count: n=" + std::to_string(n) + " exceeds table limit " + std::to_string(limit_));
    }
    return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

unsigned max_exponent(std::uint64_t p, std::uint64_t n) {
    unsigned m = 0;
    std::uint64_t power = 1;
    while (power <= n / p) {
        power *= p;
        ++m;
    }
    return m;
}

DnEntry dn_prime_powers(const PrimeTable& table, std::uint64_t n) {
    if (n < 1 || n > table.limit()) {
        throw std::out_of_range("dn_prime_powers: n=" + std::to_string(n) + " outside [1, " + std::to_string(table.limit()) + "]");
    }
    DnEntry entry;
    entry.n = n;
    entry.dn = 1;
    // Pack small prime powers into a machine word before touching the big integer.
    std::uint64_t word = 1;
    for (const std::uint64_t p : table.primes()) {
        if (p > n) break;
        const unsigned m = max_exponent(p, n);
        entry.factorization.push_back({p, m});
        std::uint64_t pm = 1;
        for (unsigned i = 0; i < m; ++i) pm *= p;
        if (word > std::numeric_limits<std::uint64_t>::max() / pm) {
            mpz_mul_ui(entry.dn.get_mpz_t(), entry.dn.get_mpz_t(), word);
            word = 1;
        }
        word *= pm;
    }
    mpz_mul_ui(entry.dn.get_mpz_t(), entry.dn.get_mpz_t(), word);
    return entry;
}

BigInt dn_iterated_lcm(std::uint64_t n) {
    BigInt acc = 1;
    for (std::uint64_t k = 2; k <= n; ++k) mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), k);
    return acc;
}

std::uint64_t prime_power_base(std::uint64_t n) {
    if (n < 2) return 0;
    std::uint64_t p = 0;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            p = f;
            break;
        }
    }
    if (p == 0) return n;  // n itself is prime
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

DnStream::DnStream(const PrimeTable& table) : table_(&table) {
    for (const std::uint64_t p : table.primes()) {
        if (p > table.limit() / p) break;
        for (std::uint64_t q = p * p;; q *= p) {
            higher_powers_.push_back({q, p});
            if (q > table.limit() / p) break;
        }
    }
    std::sort(higher_powers_.begin(), higher_powers_.end());
}

std::pair<std::uint64_t, const BigInt&> DnStream::next() {
    if (n_ >= table_->limit()) throw std::out_of_range("DnStream: past table limit");
    ++n_;
    const auto primes = table_->primes();
    if (std::binary_search(primes.begin(), primes.end(), n_)) {
        mpz_mul_ui(dn_.get_mpz_t(), dn_.get_mpz_t(), n_);
    } else {
        const auto it = std::lower_bound(higher_powers_.begin(), higher_powers_.end(), std::pair<std::uint64_t, std::uint64_t>{n_, 0});
        if (it != higher_powers_.end() && it->first == n_) mpz_mul_ui(dn_.get_mpz_t(), dn_.get_mpz_t(), it->second);
    }
    return {n_, dn_};
}

std::vector<Rational> harmonic_table(unsigned long n, unsigned order) {
    if (order != 1 && order != 2 && order != 3) throw std::domain_error("harmonic_table: order must be 1, 2 or 3");
    std::vector<Rational> h(n + 1);
    for (unsigned long k = 1; k <= n; ++k) {
        BigInt den = k;
        for (unsigned i = 1; i < order; ++i) den *= k;
        h[k] = h[k - 1] + Rational(BigInt(1), den);
    }
    return h;
}

Rational harmonic(unsigned long n) { return harmonic_table(n, 1).back(); }
Rational harmonic2(unsigned long n) { return harmonic_table(n, 2).back(); }

Rational zeta_partial(unsigned long n, unsigned power) {
    if (power != 2 && power != 3) throw std::domain_error("zeta_partial: power must be 2 or 3");
    return harmonic_table(n, power).back();
}

}  // namespace beukers
