#include "weilkit/factor.hpp"

#include <algorithm>
#include <map>

#include "weilkit/error.hpp"

namespace weilkit {

namespace {

constexpr int kMaxDegree = 64;

// Coefficients reduced into (-m/2, m/2].
IntPoly reduce_symmetric(const IntPoly& f, const Integer& m) {
  Integer half = m / 2;
  std::vector<Integer> v = f.coeffs();
  for (auto& c : v) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  return IntPoly(std::move(v));
}

IntPoly reduce_nonneg(const IntPoly& f, const Integer& m) {
  std::vector<Integer> v = f.coeffs();
  for (auto& c : v) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorCode::InternalInconsistency, "expected exact polynomial division");
  return *q;
}

// One linear Hensel lift of F = G*H mod p to precision p^k.
std::pair<IntPoly, IntPoly> lift_pair(const IntPoly& F, const ModPoly& g, const ModPoly& h, std::uint64_t p, int k) {
  XGcd e = xgcd(g, h);
  if (e.g.degree() != 0) throw Error(ErrorCode::InvalidArgument, "Hensel factors not coprime mod p");
  IntPoly G = g.lift();
  IntPoly H = h.lift();
  const Integer P = from_u64(p);
  Integer pi = P;
  for (int i = 1; i < k; ++i) {
    IntPoly diff = F - G * H;
    std::vector<Integer> c = diff.coeffs();
    for (auto& x : c) {
      if (!mpz_divisible_p(x.get_mpz_t(), pi.get_mpz_t()))
        throw Error(ErrorCode::InternalInconsistency, "Hensel invariant violated");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pi.get_mpz_t());
    }
    ModPoly err = ModPoly::reduce(IntPoly(std::move(c)), p);
    if (!err.is_zero()) {
      auto [q, r] = divmod(err * e.t, g);
      ModPoly dh = err * e.s + q * h;
      G += r.lift().scaled(pi);
      H += dh.lift().scaled(pi);
    }
    pi *= P;
  }
  return {reduce_nonneg(G, pi), reduce_nonneg(H, pi)};
}

Integer norm2_ceiling(const IntPoly& f) {
  Integer s = 0;
  for (const auto& c : f.coeffs()) s += c * c;
  Integer r = isqrt(s);
  if (r * r < s) r += 1;
  return r;
}

// Zassenhaus for a monic squarefree polynomial of degree >= 2 with f(0) != 0.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int n = f.degree();
  // Among the first few good primes, keep the one with the fewest modular factors;
  // the intersection of possible factor-degree sets can certify irreducibility early.
  std::uint64_t best_p = 0;
  std::vector<std::pair<ModPoly, int>> best;
  std::vector<bool> possible(static_cast<size_t>(n) + 1, true);
  int good_seen = 0;
  for (std::uint64_t p = 2; good_seen < 5; p = next_prime(p)) {
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.degree() != n || !is_squarefree(fp)) continue;
    ++good_seen;
    auto fac = factor_mod(fp);
    std::vector<bool> sums(static_cast<size_t>(n) + 1, false);
    sums[0] = true;
    for (const auto& [g, m] : fac)
      for (int s = n; s >= g.degree(); --s)
        if (sums[static_cast<size_t>(s - g.degree())]) sums[static_cast<size_t>(s)] = true;
    for (int s = 0; s <= n; ++s) possible[static_cast<size_t>(s)] = possible[static_cast<size_t>(s)] && sums[static_cast<size_t>(s)];
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    bool only_trivial = true;
    for (int s = 1; s < n; ++s)
      if (possible[static_cast<size_t>(s)]) only_trivial = false;
    if (only_trivial || best.size() == 1) return {f};
  }
  const std::uint64_t p = best_p;
  // Coefficient bound for any monic factor: 2^n * ||f||_2.
  Integer bound = ipow(2, static_cast<unsigned long>(n)) * norm2_ceiling(f);
  int k = 1;
  Integer pk = from_u64(p);
  while (pk <= 2 * bound) {
    pk *= from_u64(p);
    ++k;
  }
  std::vector<ModPoly> mods;
  for (const auto& [g, m] : best) mods.push_back(g);
  std::vector<IntPoly> lifted = hensel_lift(f, mods, p, k);

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::vector<IntPoly> pool = lifted;
  size_t s = 1;
  while (2 * s <= pool.size()) {
    bool progressed = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      // Constant term filter before the full product.
      Integer c0 = 1;
      for (size_t i : idx) c0 = c0 * pool[i].coeff(0);
      mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), pk.get_mpz_t());
      if (c0 > pk / 2) c0 -= pk;
      Integer rest0 = rest.coeff(0);
      bool ok = c0 != 0 && mpz_divisible_p(rest0.get_mpz_t(), c0.get_mpz_t());
      if (ok) {
        IntPoly prod = IntPoly::constant(1);
        for (size_t i : idx) prod = reduce_symmetric(prod * pool[i], pk);
        if (auto q = try_divide(rest, prod)) {
          found.push_back(prod);
          rest = *q;
          std::vector<IntPoly> next;
          for (size_t i = 0; i < pool.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
          pool = std::move(next);
          progressed = true;
          break;
        }
      }
      // Next combination.
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == pool.size() - s + static_cast<size_t>(i)) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (size_t j = static_cast<size_t>(i) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progressed) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

bool factor_less(const std::pair<IntPoly, int>& a, const std::pair<IntPoly, int>& b) {
  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
  if (a.first != b.first) return IntPoly::lex_less(a.first, b.first);
  return a.second < b.second;
}

}  // namespace

IntPoly cyclotomic(long d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  std::map<long, IntPoly> phi;
  for (long e : divisors(d)) {
    IntPoly num = IntPoly::monomial(1, static_cast<int>(e)) - IntPoly::constant(1);
    for (const auto& [e2, poly] : phi)
      if (e % e2 == 0) num = divmod_monic(num, poly).first;
    phi.emplace(e, num);
  }
  return phi.at(d);
}

std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors, std::uint64_t p, int k) {
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "hensel_lift needs a monic polynomial");
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "no factors to lift");
  Integer pk = ipow(from_u64(p), static_cast<unsigned long>(k));
  std::vector<IntPoly> out;
  IntPoly target = f;
  for (size_t i = 0; i + 1 < factors.size(); ++i) {
    ModPoly rest = ModPoly::constant(p, 1);
    for (size_t j = i + 1; j < factors.size(); ++j) rest = rest * factors[j];
    auto [G, H] = lift_pair(target, factors[i].monic(), rest.monic(), p, k);
    out.push_back(G);
    target = H;
  }
  out.push_back(reduce_nonneg(target, pk));
  return out;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "squarefree_decomposition needs a monic polynomial");
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() == 0) return out;
  IntPoly df = f.derivative();
  IntPoly b = gcd(f, df);
  IntPoly c = exact_div(f, b);
  IntPoly d = exact_div(df, b) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    IntPoly a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = exact_div(c, a);
    d = exact_div(d, a) - c.derivative();
  }
  return out;
}

std::vector<std::pair<IntPoly, int>> factor_over_integers(const IntPoly& f) {
  if (f.is_zero() || !f.is_monic()) throw Error(ErrorCode::NotMonic, "factor_over_integers needs a monic polynomial");
  if (f.degree() > kMaxDegree)
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(f.degree()) + " exceeds 64");
  std::vector<std::pair<IntPoly, int>> out;
  // Strip the power of X first so the Zassenhaus input has nonzero constant term.
  int xm = 0;
  while (xm <= f.degree() && f.coeff(xm) == 0) ++xm;
  IntPoly g(std::vector<Integer>(f.coeffs().begin() + xm, f.coeffs().end()));
  if (xm > 0) out.emplace_back(IntPoly::x(), xm);
  for (const auto& [piece, mult] : squarefree_decomposition(g)) {
    if (piece.degree() == 1) {
      out.emplace_back(piece, mult);
      continue;
    }
    for (auto& h : zassenhaus(piece)) out.emplace_back(std::move(h), mult);
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

bool is_irreducible(const IntPoly& f) {
  auto fac = factor_over_integers(f);
  return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace weilkit
