#include "weilkit/mod_poly.hpp"

#include <algorithm>

#include "weilkit/error.hpp"

namespace weilkit {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + m - b; }

void check_same(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorCode::InvalidArgument, "modulus mismatch");
}

}  // namespace

ModPoly::ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs) : l_(modulus), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= l_;
  normalize();
}

ModPoly ModPoly::reduce(const IntPoly& f, std::uint64_t modulus) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(mod_u64(a, modulus));
  return ModPoly(modulus, std::move(c));
}

ModPoly ModPoly::constant(std::uint64_t modulus, std::uint64_t c) { return ModPoly(modulus, {c}); }

ModPoly ModPoly::x(std::uint64_t modulus) { return ModPoly(modulus, {0, 1}); }

void ModPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(inv_mod(leading(), l_));
}

ModPoly ModPoly::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> v(c_);
  for (auto& x : v) x = mul_mod(x, s, l_);
  return ModPoly(l_, std::move(v));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(l_, {});
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = mul_mod(c_[i], i % l_, l_);
  return ModPoly(l_, std::move(d));
}

std::uint64_t ModPoly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(mul_mod(acc, x, l_), *it, l_);
  return acc;
}

IntPoly ModPoly::lift_symmetric() const {
  std::vector<Integer> v;
  v.reserve(c_.size());
  for (auto x : c_) {
    Integer z = from_u64(x);
    if (x > l_ / 2) z -= from_u64(l_);
    v.push_back(z);
  }
  return IntPoly(std::move(v));
}

IntPoly ModPoly::lift() const {
  std::vector<Integer> v;
  v.reserve(c_.size());
  for (auto x : c_) v.push_back(from_u64(x));
  return IntPoly(std::move(v));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  check_same(a, b);
  const auto m = a.l_;
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = add_mod(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0, m);
  return ModPoly(m, std::move(v));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  check_same(a, b);
  const auto m = a.l_;
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = sub_mod(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0, m);
  return ModPoly(m, std::move(v));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  check_same(a, b);
  const auto m = a.l_;
  if (a.is_zero() || b.is_zero()) return ModPoly(m, {});
  std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = add_mod(v[i + j], mul_mod(a.c_[i], b.c_[j], m), m);
  }
  return ModPoly(m, std::move(v));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial mod l");
  const auto m = a.modulus();
  if (a.degree() < b.degree()) return {ModPoly(m, {}), a};
  std::vector<std::uint64_t> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const std::uint64_t inv = inv_mod(b.leading(), m);
  std::vector<std::uint64_t> q(static_cast<size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    std::uint64_t c = r[static_cast<size_t>(i)];
    if (c == 0) continue;
    c = mul_mod(c, inv, m);
    q[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& t = r[static_cast<size_t>(i - db + j)];
      t = sub_mod(t, mul_mod(c, bc[static_cast<size_t>(j)], m), m);
    }
  }
  return {ModPoly(m, std::move(q)), ModPoly(m, std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly u = a, v = b;
  while (!v.is_zero()) {
    ModPoly r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

XGcd xgcd(const ModPoly& a, const ModPoly& b) {
  const auto m = a.modulus();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(m, 1), s1(m, {});
  ModPoly t0(m, {}), t1 = ModPoly::constant(m, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    ModPoly s2 = s0 - q * s1;
    ModPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  std::uint64_t inv = inv_mod(r0.leading(), m);
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& mod) {
  ModPoly result = ModPoly::constant(base.modulus(), 1) % mod;
  ModPoly b = base % mod;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

bool is_squarefree(const ModPoly& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

bool modpoly_less(const ModPoly& a, const ModPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

// p-th root of a polynomial whose derivative vanishes.
ModPoly pth_root(const ModPoly& f) {
  const auto p = f.modulus();
  std::vector<std::uint64_t> v;
  for (size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
  return ModPoly(p, std::move(v));
}

void squarefree_decompose(const ModPoly& f, int mult, std::vector<std::pair<ModPoly, int>>& out) {
  if (f.degree() <= 0) return;
  const auto p = f.modulus();
  ModPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), mult * static_cast<int>(p), out);
    return;
  }
  ModPoly c = gcd(f, d);
  ModPoly w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) squarefree_decompose(pth_root(c.monic()), mult * static_cast<int>(p), out);
}

// Deterministic test polynomials: the k-th one has base-p digits of k as coefficients.
ModPoly test_poly(std::uint64_t p, std::uint64_t k, int max_deg) {
  std::vector<std::uint64_t> v;
  while (k > 0 && static_cast<int>(v.size()) <= max_deg) {
    v.push_back(k % p);
    k /= p;
  }
  return ModPoly(p, std::move(v));
}

void equal_degree_split(const ModPoly& g, int d, std::vector<ModPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const auto p = g.modulus();
  const int n = g.degree();
  const Integer pd = ipow(from_u64(p), static_cast<unsigned long>(d));
  // Runtime depends on this enumeration order, the output does not.
  for (std::uint64_t k = p;; ++k) {
    ModPoly a = test_poly(p, k, n - 1);
    if (a.degree() <= 0) continue;
    ModPoly b;
    if (p == 2) {
      ModPoly t = a % g;
      b = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      Integer e = (pd - 1) / 2;
      b = powmod(a, e, g) - ModPoly::constant(p, 1);
    }
    ModPoly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < n) {
      equal_degree_split(h, d, out);
      equal_degree_split(divmod(g, h).first, d, out);
      return;
    }
  }
}

void distinct_degree(const ModPoly& f, std::vector<ModPoly>& irreducibles) {
  const auto p = f.modulus();
  ModPoly rest = f.monic();
  ModPoly x = ModPoly::x(p);
  ModPoly h = x % rest;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, from_u64(p), rest);
    ModPoly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      equal_degree_split(g, d, irreducibles);
      rest = divmod(rest, g).first;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) irreducibles.push_back(rest.monic());
}

}  // namespace

std::vector<std::pair<ModPoly, int>> factor_mod(const ModPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "factor_mod of zero polynomial");
  std::vector<std::pair<ModPoly, int>> sqf;
  squarefree_decompose(f.monic(), 1, sqf);
  std::vector<std::pair<ModPoly, int>> out;
  for (const auto& [g, m] : sqf) {
    std::vector<ModPoly> irr;
    distinct_degree(g, irr);
    for (auto& h : irr) out.emplace_back(std::move(h), m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return modpoly_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

std::vector<int> factor_degrees_mod(const IntPoly& f, std::uint64_t l) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial");
  if (!is_prime(l)) throw Error(ErrorCode::InvalidArgument, "modulus is not prime");
  if (mod_u64(f.leading(), l) == 0)
    throw Error(ErrorCode::LeadingCoeffVanishes, "leading coefficient vanishes mod " + std::to_string(l));
  std::vector<int> degs;
  for (const auto& [g, m] : factor_mod(ModPoly::reduce(f, l)))
    for (int i = 0; i < m; ++i) degs.push_back(g.degree());
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace weilkit
