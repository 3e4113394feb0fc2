#include "weilkit/weil.hpp"

#include <algorithm>
#include <functional>

#include "weilkit/error.hpp"
#include "weilkit/factor.hpp"
#include "weilkit/mod_poly.hpp"
#include "weilkit/newton.hpp"
#include "weilkit/sturm.hpp"

namespace weilkit {

namespace {

constexpr int kMaxDegree = 64;

void check_shape(const IntPoly& poly, std::uint64_t p, int f) {
  if (poly.is_zero() || !poly.is_monic()) throw Error(ErrorCode::NotMonic, "polynomial is not monic");
  if (poly.degree() % 2 != 0) throw Error(ErrorCode::OddDegree, "polynomial has odd degree " + std::to_string(poly.degree()));
  if (poly.degree() < 2) throw Error(ErrorCode::InvalidArgument, "degree must be at least 2");
  if (poly.degree() > kMaxDegree) throw Error(ErrorCode::DegreeTooLarge, "degree exceeds 64");
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (f < 1) throw Error(ErrorCode::InvalidArgument, "f must be positive");
}

// Divide out every power of d; returns the remaining polynomial.
IntPoly strip(IntPoly r, const IntPoly& d) {
  while (r.degree() >= d.degree()) {
    auto q = try_divide(r, d);
    if (!q) break;
    r = *q;
  }
  return r;
}

// Largest e with phi(p^e) <= bound.
int max_exponent(long p, long bound) {
  int e = 0;
  long phi = p - 1;
  while (phi <= bound) {
    ++e;
    if (phi > bound / p) break;
    phi *= p;
  }
  return e;
}

std::vector<long> primes_upto(long n) {
  std::vector<long> out;
  for (long k = 2; k <= n; ++k)
    if (is_prime(static_cast<std::uint64_t>(k))) out.push_back(k);
  return out;
}

// Every m > 1 with phi(m) <= bound, ascending.
std::vector<Integer> small_phi_values(long bound) {
  std::vector<long> ps = primes_upto(bound + 1);
  std::vector<Integer> out;
  std::function<void(size_t, Integer, long)> dfs = [&](size_t i, Integer m, long phi) {
    if (i == ps.size()) {
      if (m > 1) out.push_back(m);
      return;
    }
    if (ps[i] - 1 > bound / phi) {
      // No larger prime fits either.
      if (m > 1) out.push_back(m);
      return;
    }
    dfs(i + 1, m, phi);
    Integer pm = m * ps[i];
    long ph = phi * (ps[i] - 1);
    while (ph <= bound) {
      dfs(i + 1, pm, ph);
      pm *= ps[i];
      if (ph > bound / ps[i]) break;
      ph *= ps[i];
    }
  };
  dfs(0, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

// det [1, y, ..., y^(n-1)] mod l, with y = X^e mod P.
std::uint64_t krylov_det_mod(const ModPoly& P, const Integer& e) {
  const auto l = P.modulus();
  const int n = P.degree();
  ModPoly y = powmod(ModPoly::x(l), e, P);
  std::vector<std::vector<std::uint64_t>> m(static_cast<size_t>(n), std::vector<std::uint64_t>(static_cast<size_t>(n), 0));
  ModPoly cur = ModPoly::constant(l, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = cur.coeff(j);
    cur = (cur * y) % P;
  }
  std::uint64_t det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(c)]);
      det = (l - det) % l;
    }
    const auto pv = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
    det = mul_mod(det, pv, l);
    const auto inv = inv_mod(pv, l);
    for (int r = c + 1; r < n; ++r) {
      auto fac = mul_mod(m[static_cast<size_t>(r)][static_cast<size_t>(c)], inv, l);
      if (fac == 0) continue;
      for (int j = c; j < n; ++j) {
        auto sub = mul_mod(fac, m[static_cast<size_t>(c)][static_cast<size_t>(j)], l);
        auto& t = m[static_cast<size_t>(r)][static_cast<size_t>(j)];
        t = t >= sub ? t - sub : t + l - sub;
      }
    }
  }
  return det;
}

// Exact test: are the m-th powers of the roots of the monic squarefree P distinct?
// Builds prod (Y - alpha_i^m) from power sums.
bool distinct_powers_exact(const IntPoly& P, long m) {
  const int n = P.degree();
  const long top = m * n;
  std::vector<Integer> s(static_cast<size_t>(top) + 1, Integer(0));
  s[0] = n;
  for (long k = 1; k <= top; ++k) {
    Integer acc = 0;
    if (k <= n) acc += P.coeff(static_cast<int>(n - k)) * k;
    for (long i = 1; i <= std::min<long>(k - 1, n); ++i) acc += P.coeff(static_cast<int>(n - i)) * s[static_cast<size_t>(k - i)];
    s[static_cast<size_t>(k)] = -acc;
  }
  std::vector<Integer> e(static_cast<size_t>(n) + 1, Integer(0));
  e[0] = 1;
  for (int j = 1; j <= n; ++j) {
    Integer acc = 0;
    for (int i = 1; i <= j; ++i) {
      Integer t = e[static_cast<size_t>(j - i)] * s[static_cast<size_t>(static_cast<long>(i) * m)];
      if (i % 2 == 1) acc += t;
      else acc -= t;
    }
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j));
    e[static_cast<size_t>(j)] = acc;
  }
  std::vector<Integer> coeffs(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) coeffs[static_cast<size_t>(n - j)] = (j % 2 == 0) ? e[static_cast<size_t>(j)] : Integer(-e[static_cast<size_t>(j)]);
  return is_squarefree(IntPoly(std::move(coeffs)));
}

const std::uint64_t kNeatPrimes[2] = {2305843009213693951ULL, 2305843009213693921ULL};

}  // namespace

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Ordinary: return "ordinary";
    case Flavor::Supersingular: return "supersingular";
    case Flavor::Mixed: return "mixed";
  }
  return "mixed";
}

std::vector<std::string> weil_violations(const IntPoly& poly, std::uint64_t p, int f) {
  check_shape(poly, p, f);
  std::vector<std::string> out;
  const int g = poly.degree() / 2;
  const Integer q = ipow(from_u64(p), static_cast<unsigned long>(f));
  const Integer qg = ipow(q, static_cast<unsigned long>(g));
  const Integer& c0 = poly.coeff(0);
  int eps = 0;
  if (c0 == qg) eps = 1;
  else if (c0 == -qg) eps = -1;
  else out.push_back("constant term " + c0.get_str() + " is not +-q^g = +-" + qg.get_str());

  if (eps != 0) {
    Integer qi = 1;
    for (int i = 0; i <= 2 * g; ++i) {
      Integer lhs = poly.coeff(i) * qi;
      Integer rhs = poly.coeff(2 * g - i) * qg * eps;
      if (lhs != rhs) {
        out.push_back("not self-inversive at coefficient " + std::to_string(i));
        break;
      }
      qi *= q;
    }
  }

  // Real roots can only be +-sqrt(q); remove them before the trace transform.
  IntPoly r = poly;
  if (is_perfect_square(q)) {
    Integer s = isqrt(q);
    r = strip(r, IntPoly::linear(s));
    r = strip(r, IntPoly::linear(-s));
  } else {
    r = strip(r, IntPoly({0, 0, 1}) - IntPoly::constant(q));
  }
  if (r.degree() % 2 != 0) {
    out.push_back("odd-degree part remains after removing real-root factors");
    return out;
  }
  const int h = r.degree() / 2;
  // Peel r(X) = sum b_k X^(h-k) (X^2 + q)^k from the top.
  std::vector<Integer> b(static_cast<size_t>(h) + 1);
  IntPoly rest = r;
  IntPoly x2q = IntPoly({0, 0, 1}) + IntPoly::constant(q);
  for (int k = h; k >= 0; --k) {
    Integer bk = rest.coeff(h + k);
    b[static_cast<size_t>(k)] = bk;
    if (bk != 0) rest -= (IntPoly::monomial(1, h - k) * pow(x2q, static_cast<unsigned>(k))).scaled(bk);
  }
  if (!rest.is_zero()) {
    out.push_back("functional equation a_i = q^(g-i) a_(2g-i) fails after removing real roots");
    return out;
  }
  IntPoly trace(b);
  if (trace.degree() >= 1) {
    IntPoly ts = squarefree_part(trace);
    int inside = count_roots_sqrt_interval(ts, -2, 2, q);
    if (inside != ts.degree()) out.push_back("roots not on the circle |x| = sqrt(q)");
  }
  return out;
}

WeilPolynomial validate_weil(const IntPoly& poly, std::uint64_t p, int f) {
  auto v = weil_violations(poly, p, f);
  if (!v.empty()) throw Error(ErrorCode::NotWeil, "not a Weil polynomial", v);
  WeilPolynomial w;
  w.poly = poly;
  w.p = p;
  w.f = f;
  w.q = ipow(from_u64(p), static_cast<unsigned long>(f));
  w.g = poly.degree() / 2;
  w.epsilon = poly.coeff(0) > 0 ? 1 : -1;
  return w;
}

SlopeProfile newton_slopes(const IntPoly& poly, std::uint64_t p, int f) {
  SlopeProfile out;
  for (const auto& [s, m] : newton_polygon(poly, p).slopes) out[s / f] += m;
  return out;
}

SlopeProfile newton_slopes(const WeilPolynomial& w) { return newton_slopes(w.poly, w.p, w.f); }

ReductionFlavor reduction_flavor(const WeilPolynomial& w) {
  ReductionFlavor out;
  out.profile = newton_slopes(w);
  SlopeProfile ordinary{{Rational(0), w.g}, {Rational(1), w.g}};
  bool np_ordinary = out.profile == ordinary;
  bool coeff_ordinary = mod_u64(w.poly.coeff(w.g), w.p) != 0;
  if (np_ordinary != coeff_ordinary)
    throw Error(ErrorCode::InternalInconsistency, "Newton-polygon and middle-coefficient ordinarity disagree");
  if (np_ordinary) out.kind = Flavor::Ordinary;
  else if (out.profile.size() == 1 && out.profile.begin()->first == make_rational(1, 2)) out.kind = Flavor::Supersingular;
  else out.kind = Flavor::Mixed;
  return out;
}

bool is_weakly_neat(const IntPoly& poly) {
  IntPoly P = squarefree_part(poly);
  const int n = P.degree();
  if (n <= 1) return true;
  const long bound = static_cast<long>(n) * (n - 1);
  // A root-of-unity ratio of order m has phi(m) <= n(n-1), so m divides M.
  Integer M = 1;
  for (long p : primes_upto(bound + 1)) M *= ipow(p, static_cast<unsigned long>(max_exponent(p, bound)));
  ModPoly P1 = ModPoly::reduce(P, kNeatPrimes[0]);
  ModPoly P2 = ModPoly::reduce(P, kNeatPrimes[1]);
  if (krylov_det_mod(P1, M) != 0 || krylov_det_mod(P2, M) != 0) return true;
  for (const Integer& m : small_phi_values(bound)) {
    if (krylov_det_mod(P1, m) != 0 || krylov_det_mod(P2, m) != 0) continue;
    if (!distinct_powers_exact(P, m.get_si())) return false;
  }
  return true;
}

bool is_weakly_neat(const WeilPolynomial& w) { return is_weakly_neat(w.poly); }

bool splitting_test(const IntPoly& poly, std::uint64_t p) {
  if (!is_irreducible(poly)) throw Error(ErrorCode::Reducible, "polynomial is reducible over Z");
  ModPoly fm = ModPoly::reduce(poly, p);
  if (!is_squarefree(fm)) return false;
  ModPoly xp = powmod(ModPoly::x(p), from_u64(p), fm);
  ModPoly g = gcd(xp - ModPoly::x(p), fm);
  return g.degree() == fm.degree();
}

bool splitting_test(const WeilPolynomial& w) { return splitting_test(w.poly, w.p); }

}  // namespace weilkit
