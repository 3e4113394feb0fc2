#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "weilkit/error.hpp"
#include "weilkit/factor.hpp"
#include "weilkit/matrix.hpp"
#include "weilkit/mod_poly.hpp"
#include "weilkit/newton.hpp"
#include "weilkit/sturm.hpp"

using namespace weilkit;

namespace {

// Roots of f in F_l by trying every residue.
std::vector<std::uint64_t> brute_roots(const IntPoly& f, std::uint64_t l) {
  std::vector<std::uint64_t> r;
  for (std::uint64_t x = 0; x < l; ++x)
    if (mod_u64(f.eval(from_u64(x)), l) == 0) r.push_back(x);
  return r;
}

IntPoly product(const std::vector<std::pair<IntPoly, int>>& fac) {
  IntPoly p = IntPoly::constant(1);
  for (const auto& [g, m] : fac) p = p * pow(g, static_cast<unsigned>(m));
  return p;
}

// Lower hull value at each integer index by minimizing over all chords.
std::vector<Rational> brute_hull(const std::vector<std::pair<long, Rational>>& pts, long n) {
  std::vector<Rational> h(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    bool set = false;
    for (const auto& a : pts)
      for (const auto& b : pts) {
        if (a.first > i || b.first < i) continue;
        Rational v = a.second;
        if (b.first != a.first) v += (b.second - a.second) * make_rational(i - a.first, b.first - a.first);
        else if (a.first != i) continue;
        if (!set || v < h[static_cast<size_t>(i)]) h[static_cast<size_t>(i)] = v;
        set = true;
      }
  }
  return h;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly({-1, 1}));
  CHECK(cyclotomic(5) == IntPoly({1, 1, 1, 1, 1}));
  CHECK(cyclotomic(6) == IntPoly({1, -1, 1}));
  CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
  CHECK_THROWS_AS(cyclotomic(0), Error);
}

TEST_CASE("product of cyclotomics over divisors is X^N - 1") {
  for (long n = 1; n <= 64; ++n) {
    IntPoly p = IntPoly::constant(1);
    for (long d : divisors(n)) p = p * cyclotomic(d);
    CHECK(p == IntPoly::monomial(1, static_cast<int>(n)) - IntPoly::constant(1));
    CHECK(cyclotomic(n).degree() == euler_phi(n));
  }
}

TEST_CASE("factor degrees mod l") {
  CHECK(factor_degrees_mod(IntPoly({0, -1, 0, 1}), 5) == std::vector<int>{1, 1, 1});
  CHECK(factor_degrees_mod(IntPoly({1, 0, 1}), 5) == std::vector<int>{1, 1});
  CHECK(factor_degrees_mod(IntPoly({1, 0, 1}), 3) == std::vector<int>{2});
  CHECK(brute_roots(IntPoly({1, 0, 1}), 5) == std::vector<std::uint64_t>{2, 3});
  CHECK(brute_roots(IntPoly({1, 0, 1}), 3).empty());
  CHECK(factor_degrees_mod(IntPoly({1, 2, 1}), 7) == std::vector<int>{1, 1});
  CHECK(factor_degrees_mod(IntPoly({0, 0, 0, 0, 0, 0, 0, 1}), 7) == std::vector<int>(7, 1));
  try {
    (void)factor_degrees_mod(IntPoly({1, 0, 5}), 5);
    FAIL("expected LeadingCoeffVanishes");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LeadingCoeffVanishes);
  }
}

TEST_CASE("linear factor count mod l matches exhaustive root search") {
  std::mt19937_64 rng(7);
  for (std::uint64_t l : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL}) {
    for (int trial = 0; trial < 40; ++trial) {
      int deg = 1 + static_cast<int>(rng() % 7);
      std::vector<Integer> c;
      for (int i = 0; i < deg; ++i) c.emplace_back(static_cast<long>(rng() % 41) - 20);
      c.emplace_back(1);
      IntPoly f(c);
      ModPoly fm = ModPoly::reduce(f, l);
      auto degs = factor_degrees_mod(f, l);
      int sum = 0;
      for (int d : degs) sum += d;
      CHECK(sum == deg);
      if (is_squarefree(fm)) {
        auto ones = std::count(degs.begin(), degs.end(), 1);
        CHECK(static_cast<size_t>(ones) == brute_roots(f, l).size());
      }
      // Multiplying the modular factors back reproduces f mod l.
      ModPoly back = ModPoly::constant(l, 1);
      for (const auto& [g, m] : factor_mod(fm))
        for (int i = 0; i < m; ++i) back = back * g;
      CHECK(back == fm.monic());
    }
  }
}

TEST_CASE("factor over the integers") {
  auto f1 = factor_over_integers(IntPoly({-1, 0, 0, 0, 1}));
  REQUIRE(f1.size() == 3);
  CHECK(f1[0] == std::make_pair(IntPoly({-1, 1}), 1));
  CHECK(f1[1] == std::make_pair(IntPoly({1, 1}), 1));
  CHECK(f1[2] == std::make_pair(IntPoly({1, 0, 1}), 1));

  IntPoly q({3, -1, 1});
  auto f2 = factor_over_integers(q);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == std::make_pair(q, 1));
  CHECK(discriminant(q) == -11);
  CHECK(brute_roots(q, 11).size() == 1);  // the double root mod 11

  auto f3 = factor_over_integers(q * q);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0] == std::make_pair(q, 2));

  auto f4 = factor_over_integers(pow(IntPoly({-3, 1}), 32));
  REQUIRE(f4.size() == 1);
  CHECK(f4[0].second == 32);

  // X^4 + 1 is irreducible over Z but reducible mod every prime.
  CHECK(is_irreducible(IntPoly({1, 0, 0, 0, 1})));
  IntPoly x = IntPoly::x();
  CHECK(factor_over_integers(x * x * IntPoly({1, 0, 1})).size() == 2);
  CHECK_THROWS_AS(factor_over_integers(IntPoly::monomial(1, 65) + IntPoly::constant(1)), Error);
}

TEST_CASE("factorization of random products of small irreducibles") {
  std::mt19937_64 rng(20240611);
  // Pool of irreducibles: quadratics with nonsquare discriminant and some cyclotomics.
  std::vector<IntPoly> pool;
  for (long b = -6; b <= 6; ++b)
    for (long c = 1; c <= 12; ++c) {
      IntPoly g({c, b, 1});
      Integer d = b * b - 4 * c;
      if (!is_perfect_square(d)) pool.push_back(g);
    }
  for (long d : {1L, 3L, 5L, 7L, 8L, 9L, 12L}) pool.push_back(cyclotomic(d));
  pool.push_back(IntPoly({-2, 0, 0, 1}));
  pool.push_back(IntPoly({1, 0, 0, 0, 1}));
  for (int trial = 0; trial < 1000; ++trial) {
    std::map<std::vector<Integer>, int> want;
    IntPoly f = IntPoly::constant(1);
    int parts = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < parts; ++i) {
      const IntPoly& g = pool[rng() % pool.size()];
      if (f.degree() + g.degree() > 20) break;
      f = f * g;
      want[g.coeffs()] += 1;
    }
    auto fac = factor_over_integers(f);
    CHECK(product(fac) == f);
    std::map<std::vector<Integer>, int> got;
    for (const auto& [g, m] : fac) got[g.coeffs()] += m;
    CHECK(got == want);
    for (size_t i = 1; i < fac.size(); ++i) {
      bool ordered = fac[i - 1].first.degree() < fac[i].first.degree() ||
                     (fac[i - 1].first.degree() == fac[i].first.degree() && IntPoly::lex_less(fac[i - 1].first, fac[i].first));
      CHECK(ordered);
    }
  }
}

TEST_CASE("Hensel lifting of a coprime factorization") {
  IntPoly f({3, -1, 1});  // X^2 - X + 3 = X (X - 1) mod 3
  std::vector<ModPoly> mods{ModPoly(3, {0, 1}), ModPoly(3, {2, 1})};
  auto lifted = hensel_lift(f, mods, 3, 10);
  Integer pk = ipow(3, 10);
  IntPoly prod = lifted[0] * lifted[1];
  for (int i = 0; i <= 2; ++i) {
    Integer d = prod.coeff(i) - f.coeff(i);
    CHECK(mpz_divisible_p(d.get_mpz_t(), pk.get_mpz_t()) != 0);
  }
  // The root near 0 is divisible by 3 exactly once, matching slope 1.
  CHECK(valuation(lifted[0].coeff(0), 3) == 1);
}

TEST_CASE("Newton polygon") {
  using P = std::vector<std::pair<long, std::optional<Rational>>>;
  auto a = newton_polygon(P{{0, Rational(1)}, {1, Rational(0)}, {2, Rational(0)}});
  CHECK(a.slopes == std::vector<std::pair<Rational, int>>{{Rational(0), 1}, {Rational(1), 1}});
  auto b = newton_polygon(P{{0, Rational(1)}, {1, std::nullopt}, {2, Rational(0)}});
  CHECK(b.slopes == std::vector<std::pair<Rational, int>>{{make_rational(1, 2), 2}});
  auto c = newton_polygon(P{{0, Rational(0)}, {1, Rational(0)}});
  CHECK(c.slopes == std::vector<std::pair<Rational, int>>{{Rational(0), 1}});
  CHECK_THROWS_AS(newton_polygon(P{{0, Rational(1)}}), Error);
  CHECK_THROWS_AS(newton_polygon(P{{0, std::nullopt}, {1, Rational(0)}, {2, Rational(0)}}), Error);
}

TEST_CASE("Newton polygon agrees with brute-force hull") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    long n = 2 + static_cast<long>(rng() % 10);
    std::vector<std::pair<long, std::optional<Rational>>> pts;
    std::vector<std::pair<long, Rational>> finite;
    for (long i = 0; i <= n; ++i) {
      bool inf = i != 0 && i != n && rng() % 4 == 0;
      if (inf) {
        pts.emplace_back(i, std::nullopt);
      } else {
        Rational v(static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 3));
        v.canonicalize();
        pts.emplace_back(i, v);
        finite.emplace_back(i, v);
      }
    }
    auto np = newton_polygon(pts);
    auto hull = brute_hull(finite, n);
    std::map<Rational, int> expect;
    for (long i = 0; i < n; ++i) expect[hull[static_cast<size_t>(i)] - hull[static_cast<size_t>(i + 1)]] += 1;
    std::vector<std::pair<Rational, int>> ev(expect.begin(), expect.end());
    CHECK(np.slopes == ev);
    Rational total = 0;
    for (const auto& [s, m] : np.slopes) total += s * m;
    CHECK(total == finite.front().second - finite.back().second);
    for (size_t i = 1; i < np.vertices.size(); ++i) CHECK(np.vertices[i].first > np.vertices[i - 1].first);
  }
}

TEST_CASE("Sturm root counting") {
  // (X-1)(X-2)(X+3)(X^2+1)
  IntPoly f = IntPoly({-1, 1}) * IntPoly({-2, 1}) * IntPoly({3, 1}) * IntPoly({1, 0, 1});
  CHECK(count_real_roots(f) == 3);
  CHECK(count_roots(f, Rational(1), Rational(2)) == 2);
  CHECK(count_roots(f, make_rational(3, 2), Rational(2)) == 1);
  CHECK(count_roots(f, Rational(-3), Rational(0)) == 1);
  CHECK(count_roots(f * f, Rational(-10), Rational(10)) == 3);
  // X^2 - 3 has roots +-sqrt 3: both lie in [-sqrt 3, sqrt 3], none in [-1 sqrt3 ... ] strictly inside.
  IntPoly g({-3, 0, 1});
  CHECK(count_roots_sqrt_interval(g, -1, 1, 3) == 2);
  CHECK(sign_at_sqrt_multiple(g, 1, 3) == 0);
  CHECK(sign_at_sqrt_multiple(IntPoly({-5, 0, 1}), 1, 3) == -1);
  CHECK(sign_at_sqrt_multiple(IntPoly({-1, 1}), 1, 2) == 1);   // sqrt2 - 1 > 0
  CHECK(sign_at_sqrt_multiple(IntPoly({-2, 1}), 1, 3) == -1);  // sqrt3 - 2 < 0
  auto iv = isolate_real_roots(f);
  REQUIRE(iv.size() == 3);
  CHECK(sign_at_root(IntPoly({0, 1}), f, iv[0]) == -1);
  CHECK(sign_at_root(IntPoly({0, 1}), f, iv[1]) == 1);
  CHECK(sign_at_root(IntPoly({-1, 1}), f, iv[1]) == 0);
}

TEST_CASE("Sturm counts match constructed real roots") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly f = IntPoly::constant(1);
    std::vector<long> roots;
    int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) {
      long r = static_cast<long>(rng() % 21) - 10;
      roots.push_back(r);
      f = f * IntPoly::linear(r);
    }
    int complex_pairs = static_cast<int>(rng() % 3);
    for (int i = 0; i < complex_pairs; ++i) f = f * IntPoly({1 + static_cast<long>(rng() % 5), 0, 1});
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    CHECK(count_real_roots(f) == static_cast<int>(roots.size()));
    long a = static_cast<long>(rng() % 21) - 10, b = a + static_cast<long>(rng() % 10);
    long inside = std::count_if(roots.begin(), roots.end(), [&](long r) { return r >= a && r <= b; });
    CHECK(count_roots(f, Rational(a), Rational(b)) == inside);
  }
}

TEST_CASE("integer matrices") {
  IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  CHECK(determinant(m) == -144);
  auto h = hermite_normal_form(m);
  CHECK(hermite_normal_form(h) == h);
  CHECK(smith_diagonal(m) == std::vector<Integer>{2, 6, 12});
  IntMatrix a = IntMatrix::from_rows({{1, 1, 1, 1}}, 4);
  IntMatrix k = integer_kernel(a);
  CHECK(k.rows() == 3);
  CHECK(smith_diagonal(k) == std::vector<Integer>{1, 1, 1});
  for (int r = 0; r < k.rows(); ++r) {
    Integer s = 0;
    for (int c = 0; c < 4; ++c) s += k(r, c);
    CHECK(s == 0);
  }
  CHECK(rank(m) == 3);
  CHECK(rank(IntMatrix::from_rows({{1, 2}, {2, 4}}, 2)) == 1);
  CHECK(in_row_lattice({Integer(1), Integer(-1), Integer(0), Integer(0)}, k));
  CHECK_FALSE(in_row_lattice({Integer(1), Integer(0), Integer(0), Integer(0)}, k));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  std::function<Integer(const std::vector<std::vector<long>>&)> cof = [&](const std::vector<std::vector<long>>& a) -> Integer {
    size_t n = a.size();
    if (n == 1) return a[0][0];
    Integer d = 0;
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::vector<long>> minor;
      for (size_t i = 1; i < n; ++i) {
        std::vector<long> row;
        for (size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(a[i][c]);
        minor.push_back(row);
      }
      Integer t = a[0][j] * cof(minor);
      d += (j % 2 == 0) ? t : Integer(-t);
    }
    return d;
  };
  for (int trial = 0; trial < 100; ++trial) {
    size_t n = 1 + rng() % 5;
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    IntMatrix m(static_cast<int>(n), static_cast<int>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        a[i][j] = static_cast<long>(rng() % 7) - 3;
        m(static_cast<int>(i), static_cast<int>(j)) = a[i][j];
      }
    CHECK(determinant(m) == cof(a));
  }
}

TEST_CASE("resultant and discriminant") {
  CHECK(discriminant(IntPoly({3, -1, 1})) == -11);
  CHECK(discriminant(IntPoly({1, 0, 1})) == -4);
  CHECK(discriminant(IntPoly({-2, 0, 0, 1})) == -108);
  CHECK(resultant(IntPoly({-1, 1}), IntPoly({-2, 1})) == -1);
  CHECK(resultant(IntPoly({1, 0, 1}), IntPoly({-1, 0, 1})) == 4);
  CHECK(squarefree_part(pow(IntPoly({3, -1, 1}), 3) * IntPoly({1, 1})) == IntPoly({3, -1, 1}) * IntPoly({1, 1}));
}
