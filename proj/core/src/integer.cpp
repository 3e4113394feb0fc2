#include "weilkit/integer.hpp"

#include <numeric>

#include "weilkit/error.hpp"

namespace weilkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LeadingCoeffVanishes: return "LeadingCoeffVanishes";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::NotWeil: return "NotWeil";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotIsogenyClass: return "NotIsogenyClass";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NoAdmissibleAssignment: return "NoAdmissibleAssignment";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::UnstableKernel: return "UnstableKernel";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NonTransitiveH: return "NonTransitiveH";
    case ErrorCode::UnsupportedKernel: return "UnsupportedKernel";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::BadDiscriminant: return "BadDiscriminant";
    case ErrorCode::NotMonogenicDeclared: return "NotMonogenicDeclared";
    case ErrorCode::ReduciblePoly: return "ReduciblePoly";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int valuation(const Integer& x, std::uint64_t p) {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  Integer rest;
  Integer pp = from_u64(p);
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

std::uint64_t to_u64(const Integer& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw Error(ErrorCode::InvalidArgument, "integer does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

std::uint64_t mod_u64(const Integer& x, std::uint64_t m) {
  Integer mm = from_u64(m);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
  return to_u64(r);
}

bool is_perfect_square(const Integer& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  if (a % m == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  return pow_mod(a, m - 2, m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

long euler_phi(long n) {
  long r = n;
  for (std::uint64_t p : prime_divisors(static_cast<std::uint64_t>(n))) r = r / static_cast<long>(p) * (static_cast<long>(p) - 1);
  return r;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

}  // namespace weilkit
