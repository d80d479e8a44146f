#pragma once

#include "beukers/rational.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace beukers {

/// All primes <= limit, ascending.
class PrimeTable {
public:
    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    std::span<const std::uint64_t> primes() const { return primes_; }
    /// pi(n), the number of primes <= n. Requires n <= limit().
    std::uint64_t prime_count(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

/// Odds-only sieve of Eratosthenes. Throws std::domain_error for limit < 2.
PrimeTable sieve(std::uint64_t limit);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// d_n = lcm(1..n) together with its factorization prod p^m, m maximal with p^m <= n.
struct DnEntry {
    std::uint64_t n = 0;
    BigInt dn;
    std::vector<PrimePower> factorization;
};

/// Largest m with p^m <= n, by integer multiplication.
unsigned max_exponent(std::uint64_t p, std::uint64_t n);

DnEntry dn_prime_powers(const PrimeTable& table, std::uint64_t n);
BigInt dn_iterated_lcm(std::uint64_t n);

/// Streams d_1, d_2, ... incrementally: d_n = p d_{n-1} when n = p^k, else d_{n-1}.
class DnStream {
public:
    explicit DnStream(const PrimeTable& table);

    /// Advances to the next n and returns (n, d_n). Throws past table.limit().
    std::pair<std::uint64_t, const BigInt&> next();
    std::uint64_t n() const { return n_; }
    const BigInt& dn() const { return dn_; }

private:
    const PrimeTable* table_;
    // (p^k, p) for k >= 2, sorted by p^k.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> higher_powers_;
    std::uint64_t n_ = 0;
    BigInt dn_ = 1;
};

/// If n = p^k with k >= 1, returns p; otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

Rational harmonic(unsigned long n);
Rational harmonic2(unsigned long n);
/// sum_{m=1}^{n} m^-power for power in {2, 3}.
Rational zeta_partial(unsigned long n, unsigned power);

/// H_0..H_n (order 1) or H^(2)_0..H^(2)_n (order 2), built cumulatively.
std::vector<Rational> harmonic_table(unsigned long n, unsigned order);

}  // namespace beukers
