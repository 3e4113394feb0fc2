#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace weilkit {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// p-adic valuation of a nonzero integer.
int valuation(const Integer& x, std::uint64_t p);

Integer ipow(const Integer& base, unsigned long exp);
Integer from_u64(std::uint64_t v);
std::uint64_t to_u64(const Integer& v);  // throws if out of range

/// Least nonnegative residue of `x` modulo `m`.
std::uint64_t mod_u64(const Integer& x, std::uint64_t m);

bool is_perfect_square(const Integer& x);
Integer isqrt(const Integer& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// ---- word-size number theory -------------------------------------------

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);  // m prime, a != 0

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime > n

/// Distinct prime divisors in increasing order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<long> divisors(long n);
long euler_phi(long n);
long gcd_long(long a, long b);

}  // namespace weilkit
