#pragma once

// Elementary number theory on arbitrary-precision integers.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace torus {

using Integer = mpz_class;
using Rational = mpq_class;

struct PrimePower {
    Integer prime;
    unsigned long exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
struct Factorization {
    std::vector<PrimePower> entries;

    Integer value() const;
    std::size_t size() const noexcept { return entries.size(); }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division up to sqrt(n). Rejects n <= 0.
Factorization factorize(const Integer& n);

/// Möbius function; rejects n <= 0.
int mobius(const Integer& n);
Integer totient(const Integer& n);
/// Number of distinct prime divisors; omega(1) = 0.
unsigned long omega(const Integer& n);
Integer num_divisors(const Integer& n);

/// Largest k with ell^k | n. Rejects n = 0 and composite ell.
unsigned long padic_valuation(const Integer& ell, const Integer& n);

bool is_prime(const Integer& n);

/// All positive divisors of n >= 1, ascending.
std::vector<Integer> divisors(const Integer& n);

/// Exact conversion for values used as sizes or loop bounds; throws if out of range.
std::int64_t to_int64(const Integer& n);

namespace detail {

// 64-bit kernels for hot loops in family scans. Arguments are assumed valid.
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;
int mobius_u64(std::uint64_t n) noexcept;
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

} // namespace detail

} // namespace torus
