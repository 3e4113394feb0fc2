#pragma once

// Random Weil q-polynomials built as products of small validated factors.

#include <random>
#include <vector>

#include "weilkit/error.hpp"
#include "weilkit/weil.hpp"

namespace weilkit::testgen {

struct Sample {
  IntPoly poly;
  std::uint64_t p;
  int f;
  std::vector<IntPoly> factors;
};

inline bool is_weil(const IntPoly& poly, std::uint64_t p, int f) {
  try {
    return weil_violations(poly, p, f).empty();
  } catch (const Error&) {
    return false;
  }
}

// X^2 - a X + q with a^2 <= 4q, or X^4 + a X^3 + b X^2 + q a X + q^2 passing validation.
inline IntPoly random_factor(std::mt19937_64& rng, std::uint64_t p, int f) {
  const Integer q = ipow(from_u64(p), static_cast<unsigned long>(f));
  const long bound = isqrt(4 * q).get_si();
  if (rng() % 3 != 0) {
    long a = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    return IntPoly({0, 0, 1}) - IntPoly::monomial(a, 1) + IntPoly::constant(q);
  }
  for (;;) {
    long a = static_cast<long>(rng() % static_cast<std::uint64_t>(4 * bound + 1)) - 2 * bound;
    long bb = 6 * q.get_si();
    long b = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bb + 1)) - bb;
    std::vector<Integer> c{q * q, q * a, Integer(b), Integer(a), Integer(1)};
    IntPoly cand(c);
    if (is_weil(cand, p, f)) return cand;
  }
}

inline Sample random_weil(std::mt19937_64& rng) {
  static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  Sample s;
  s.p = primes[rng() % 6];
  s.f = 1 + static_cast<int>(rng() % 3);
  int parts = 1 + static_cast<int>(rng() % 3);
  s.poly = IntPoly::constant(1);
  for (int i = 0; i < parts; ++i) {
    IntPoly h = random_factor(rng, s.p, s.f);
    s.factors.push_back(h);
    s.poly = s.poly * h;
  }
  return s;
}

}  // namespace weilkit::testgen
