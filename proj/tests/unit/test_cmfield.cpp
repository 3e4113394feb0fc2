#include <functional>

#include "doctest.h"
#include "weilkit/cmfield.hpp"
#include "weilkit/error.hpp"
#include "weilkit/integer.hpp"
#include "weilkit/mod_poly.hpp"

using namespace weilkit;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Oracle: multiplicative order by repeated multiplication.
std::uint64_t order_mod(std::uint64_t l, std::uint64_t p) {
  std::uint64_t x = l % p, k = 1;
  while (x != 1) {
    x = x * (l % p) % p;
    ++k;
  }
  return k;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return b ? gcd_u(b, a % b) : a; }

bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// The image of l in (Z/p)^* modulo the index-2d subgroup has order exactly 2d.
bool inert_by_order(std::uint64_t l, std::uint64_t p, std::uint64_t two_d) {
  std::uint64_t ord = order_mod(l, p);
  std::uint64_t m = (p - 1) / two_d;
  return ord / gcd_u(ord, m) == two_d;
}

// Oracle search: first prime passing the congruences with every l inert by order.
std::uint64_t oracle_prime(long d, const std::vector<std::uint64_t>& ls, std::uint64_t bound) {
  std::uint64_t two_d = 2 * static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (!prime_by_trial(p) || (p - 1) % two_d) continue;
    std::uint64_t m = (p - 1) / two_d;
    if (m % 2 == 0 || gcd_u(m, two_d) != 1) continue;
    bool ok = true;
    for (std::uint64_t l : ls) ok = ok && l != p && inert_by_order(l, p, two_d);
    if (ok) return p;
  }
  return 0;
}

int legendre_by_search(long a, std::uint64_t l) {
  long r = ((a % static_cast<long>(l)) + static_cast<long>(l)) % static_cast<long>(l);
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < l; ++x)
    if (x * x % l == static_cast<std::uint64_t>(r)) return 1;
  return -1;
}

const IntPoly kSqrt2{-2, 0, 1};

}  // namespace

TEST_CASE("inert CM prime examples") {
  auto w1 = find_inert_cm_prime(1, {2}, 10);
  CHECK(w1.p == 3);
  REQUIRE(w1.checked_inert.size() == 1);
  CHECK(w1.checked_inert[0].checks[0].residue == 2);
  auto w5 = find_inert_cm_prime(5, {2}, 100);
  CHECK(w5.p == 11);
  REQUIRE(w5.checked_inert[0].checks.size() == 2);
  CHECK(w5.checked_inert[0].checks[0].residue == 10);  // 2^5 mod 11
  CHECK(w5.checked_inert[0].checks[1].residue == 4);   // 2^2 mod 11
  CHECK(find_inert_cm_prime(1, {}, 10).p == 3);
  CHECK(w5.description == "degree-10 subfield of the 11-th cyclotomic field");
}

TEST_CASE("inert CM prime agrees with the order oracle") {
  struct Case {
    long d;
    std::vector<std::uint64_t> ls;
  };
  for (const auto& c : std::vector<Case>{{1, {2}}, {1, {3, 5}}, {3, {5}}, {3, {5, 7}}, {5, {3}}, {7, {2, 3}}, {9, {2}}}) {
    std::uint64_t want = oracle_prime(c.d, c.ls, 5000);
    REQUIRE(want != 0);
    auto w = find_inert_cm_prime(c.d, c.ls, 5000);
    CHECK(w.p == want);
    for (std::uint64_t l : c.ls) CHECK(inert_by_order(l, w.p, 2 * static_cast<std::uint64_t>(c.d)));
    // Monotone in the bound.
    CHECK(find_inert_cm_prime(c.d, c.ls, w.p).p == w.p);
    CHECK(find_inert_cm_prime(c.d, c.ls, 100000).p == w.p);
    CHECK(code_of([&] { find_inert_cm_prime(c.d, c.ls, w.p - 1); }) == ErrorCode::SearchExhausted);
  }
}

TEST_CASE("inert CM prime input validation") {
  CHECK(code_of([] { find_inert_cm_prime(2, {3}, 100); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { find_inert_cm_prime(3, {3}, 100); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { find_inert_cm_prime(1, {5, 5}, 100); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { find_inert_cm_prime(1, {9}, 100); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { find_inert_cm_prime(1, {2}, 2); }) == ErrorCode::SearchExhausted);
}

TEST_CASE("local embedding criterion") {
  CHECK(verify_embedding_local(Integer(-3), {3}));
  CHECK_FALSE(verify_embedding_local(Integer(-4), {5}));
  CHECK(verify_embedding_local(Integer(-3), {}));
  CHECK(verify_embedding_local(Integer(-4), {3, 2}));
  for (long bad : {5L, -1L, -12L, 0L, -16L, -28L})
    CHECK(code_of([&] { verify_embedding_local(Integer(bad), {3}); }) == ErrorCode::BadDiscriminant);
  CHECK(code_of([] { verify_embedding_local(Integer(-3), {4}); }) == ErrorCode::NotPrime);

  // Agreement with factoring X^2 - D mod l for odd l not dividing D.
  for (long dsc : {-3L, -4L, -7L, -8L, -11L, -15L, -23L, -24L, -40L, -163L}) {
    if (!is_imaginary_quadratic_discriminant(Integer(dsc))) continue;
    for (std::uint64_t l = 3; l < 200; l = next_prime(l)) {
      if (dsc % static_cast<long>(l) == 0) continue;
      auto degs = factor_degrees_mod(IntPoly{-dsc, 0, 1}, l);
      bool nonsplit = degs == std::vector<int>{2};
      CHECK(verify_embedding_local(Integer(dsc), {l}) == nonsplit);
      CHECK(kronecker_symbol(Integer(dsc), l) == legendre_by_search(dsc, l));
    }
  }
}

TEST_CASE("characteristic polynomial") {
  // Oracle in Q(sqrt 2): X^2 - 2a X + (a^2 - 2 b^2) for a + b theta.
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      IntPoly want{a * a - 2 * b * b, -2 * a, 1};
      CHECK(characteristic_polynomial(kSqrt2, IntPoly{a, b}) == want);
    }
  // theta in a cubic field has the defining polynomial as characteristic polynomial.
  IntPoly cubic{1, -2, -1, 1};
  CHECK(characteristic_polynomial(cubic, IntPoly{0, 1}) == cubic);
  CHECK(characteristic_polynomial(cubic, IntPoly{2}) == IntPoly{-8, 12, -6, 1});
}

TEST_CASE("quadratic CM alpha examples") {
  auto r1 = verify_cm_quadratic_alpha({kSqrt2, IntPoly{2, 1}, {5}, true}, 7, {});
  CHECK(r1.passed);
  CHECK(r1.checks.size() == 4);
  CHECK(r1.checks[2].passed);
  auto r2 = verify_cm_quadratic_alpha({IntPoly{0, 1}, IntPoly{1}, {3}, true}, 5, {});
  CHECK(r2.passed);
  auto r3 = verify_cm_quadratic_alpha({kSqrt2, IntPoly{0, 1}, {5}, true}, 7, {});
  CHECK_FALSE(r3.passed);
  CHECK_FALSE(r3.checks[0].passed);
  CHECK(r3.transcript.back().find("not certified") != std::string::npos);

  // alpha in Q does not generate a quadratic K.
  auto r4 = verify_cm_quadratic_alpha({kSqrt2, IntPoly{3}, {}, true}, 7, {});
  CHECK_FALSE(r4.checks[1].passed);
  // Characteristic 2 never passes the non-square check.
  auto r5 = verify_cm_quadratic_alpha({kSqrt2, IntPoly{2, 1}, {2}, true}, 7, {});
  CHECK_FALSE(r5.checks[2].passed);

  CHECK(code_of([] { verify_cm_quadratic_alpha({kSqrt2, IntPoly{2, 1}, {5}, false}, 7, {}); }) ==
        ErrorCode::NotMonogenicDeclared);
  CHECK(code_of([] { verify_cm_quadratic_alpha({IntPoly{-1, 0, 1}, IntPoly{2, 1}, {5}, true}, 7, {}); }) ==
        ErrorCode::ReduciblePoly);
  CHECK(code_of([] { verify_cm_quadratic_alpha({IntPoly{2, 0, 1}, IntPoly{2, 1}, {5}, true}, 7, {}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("non-square check matches the norm criterion") {
  // Inert l in Q(sqrt 2): -alpha is a non-square in F_{l^2} iff its norm is a non-square in F_l.
  for (std::uint64_t l : {3ULL, 5ULL, 11ULL, 13ULL})
    for (long a = 1; a <= 6; ++a)
      for (long b = -2; b <= 2; ++b) {
        if (b == 0) continue;
        long norm = a * a - 2 * b * b;
        if (norm % static_cast<long>(l) == 0) continue;
        auto r = verify_cm_quadratic_alpha({kSqrt2, IntPoly{a, b}, {l}, true}, 7, {});
        CHECK(r.checks[2].passed == (legendre_by_search(norm, l) == -1));
      }
}

TEST_CASE("split pattern above p") {
  // 2 = 3^2 mod 7, so 7 splits in Q(sqrt 2); -(2 + theta) is 2 and 1 at theta = 3, -3.
  auto r = verify_cm_quadratic_alpha({kSqrt2, IntPoly{2, 1}, {5}, true}, 7, {true, true});
  CHECK(r.checks[3].passed);
  auto bad = verify_cm_quadratic_alpha({kSqrt2, IntPoly{2, 1}, {5}, true}, 7, {false, true});
  CHECK_FALSE(bad.checks[3].passed);
  CHECK_FALSE(bad.passed);
  CHECK(code_of([] { verify_cm_quadratic_alpha({kSqrt2, IntPoly{2, 1}, {5}, true}, 7, {true}); }) ==
        ErrorCode::InvalidArgument);
  // 5 is inert in Q(sqrt 2): one prime above it.
  auto one = verify_cm_quadratic_alpha({kSqrt2, IntPoly{2, 1}, {}, true}, 5, {false});
  CHECK(one.checks[3].passed);
}

TEST_CASE("alpha search") {
  QuadraticCMSpec spec{kSqrt2, IntPoly{}, {5}, true};
  auto alpha = find_cm_quadratic_alpha(spec, 7, {true, true}, 3);
  spec.alpha = alpha;
  CHECK(verify_cm_quadratic_alpha(spec, 7, {true, true}).passed);
  CHECK(code_of([] { find_cm_quadratic_alpha({kSqrt2, IntPoly{}, {2}, true}, 7, {}, 1); }) == ErrorCode::SearchExhausted);
}
