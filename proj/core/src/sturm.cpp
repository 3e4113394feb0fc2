#include "weilkit/sturm.hpp"

#include <functional>

#include "weilkit/error.hpp"

namespace weilkit {

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_with(const std::vector<IntPoly>& seq, const std::function<int(const IntPoly&)>& sign) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) signs.push_back(sign(p));
  return variations(signs);
}

Rational cauchy_bound(const IntPoly& f) {
  Rational m = 0;
  const Integer lc = abs(f.leading());
  for (int i = 0; i < f.degree(); ++i) {
    Rational r(abs(f.coeffs()[static_cast<size_t>(i)]), lc);
    r.canonicalize();
    if (r > m) m = r;
  }
  return m + 1;
}

int sign_rational(const IntPoly& f, const Rational& x) { return sgn(f.eval(x)); }

}  // namespace

std::vector<IntPoly> sturm_sequence(const IntPoly& f) {
  std::vector<IntPoly> seq;
  if (f.is_zero()) return seq;
  seq.push_back(f);
  IntPoly d = f.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(delta+1) * rem; flip to get -rem up to a positive factor.
    int delta1 = a.degree() - b.degree() + 1;
    bool lc_pow_negative = b.leading() < 0 && (delta1 % 2 == 1);
    IntPoly next = lc_pow_negative ? r : r.negated();
    Integer c = next.content();
    std::vector<Integer> v = next.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    seq.emplace_back(std::move(v));
  }
  return seq;
}

int sign_variations(const std::vector<IntPoly>& seq, const Rational& x) {
  return variations_with(seq, [&](const IntPoly& p) { return sign_rational(p, x); });
}

int sign_variations_at_infinity(const std::vector<IntPoly>& seq, bool positive) {
  return variations_with(seq, [&](const IntPoly& p) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    return s;
  });
}

int count_real_roots(const IntPoly& f) {
  if (f.degree() <= 0) return 0;
  auto seq = sturm_sequence(squarefree_part(f));
  return sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true);
}

int count_roots(const IntPoly& f, const Rational& a, const Rational& b) {
  if (f.degree() <= 0 || a > b) return 0;
  IntPoly g = squarefree_part(f);
  auto seq = sturm_sequence(g);
  int n = sign_variations(seq, a) - sign_variations(seq, b);
  if (sign_rational(g, a) == 0) ++n;
  return n;
}

int sign_at_sqrt_multiple(const IntPoly& f, const Integer& c, const Integer& q) {
  if (q < 0) throw Error(ErrorCode::InvalidArgument, "negative radicand");
  // f(c*sqrt q) = A + B*sqrt q
  Integer A = 0, B = 0;
  Integer pw = 1;  // (c^2 q)^(i/2) pieces
  Integer c2q = c * c * q;
  const auto& co = f.coeffs();
  for (size_t i = 0; i < co.size(); i += 2) {
    A += co[i] * pw;
    if (i + 1 < co.size()) B += co[i + 1] * pw * c;
    pw *= c2q;
  }
  if (is_perfect_square(q)) return sgn(Integer(A + B * isqrt(q)));
  int sa = sgn(A), sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Integer lhs = A * A, rhs = B * B * q;
  if (lhs == rhs) return 0;  // unreachable for nonsquare q with B != 0
  return lhs > rhs ? sa : sb;
}

int count_roots_sqrt_interval(const IntPoly& f, const Integer& c_lo, const Integer& c_hi, const Integer& q) {
  if (f.degree() <= 0) return 0;
  IntPoly g = squarefree_part(f);
  auto seq = sturm_sequence(g);
  auto at = [&](const Integer& c) {
    return variations_with(seq, [&](const IntPoly& p) { return sign_at_sqrt_multiple(p, c, q); });
  };
  int n = at(c_lo) - at(c_hi);
  if (sign_at_sqrt_multiple(g, c_lo, q) == 0) ++n;
  return n;
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& f) {
  std::vector<RootInterval> out;
  if (f.degree() <= 0) return out;
  IntPoly g = squarefree_part(f);
  auto seq = sturm_sequence(g);
  Rational m = cauchy_bound(g);
  std::function<void(const Rational&, const Rational&, int, int)> split = [&](const Rational& lo, const Rational& hi, int vlo,
                                                                              int vhi) {
    int n = vlo - vhi;
    if (n == 0) return;
    if (n == 1) {
      out.push_back({lo, hi});
      return;
    }
    Rational mid = (lo + hi) / 2;
    int vm = sign_variations(seq, mid);
    split(lo, mid, vlo, vm);
    split(mid, hi, vm, vhi);
  };
  split(-m, m, sign_variations(seq, -m), sign_variations(seq, m));
  return out;
}

int sign_at_root(const IntPoly& a, const IntPoly& h, RootInterval iv) {
  if (a.is_zero()) return 0;
  if (a.degree() == 0) return sgn(a.leading());
  IntPoly hs = squarefree_part(h);
  auto hseq = sturm_sequence(hs);
  IntPoly g = gcd(hs, a);
  if (g.degree() > 0) {
    auto gseq = sturm_sequence(g);
    if (sign_variations(gseq, iv.lo) - sign_variations(gseq, iv.hi) > 0) return 0;
  }
  auto aseq = sturm_sequence(squarefree_part(a));
  while (sign_variations(aseq, iv.lo) - sign_variations(aseq, iv.hi) > 0) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (sign_variations(hseq, iv.lo) - sign_variations(hseq, mid) > 0) iv.hi = mid;
    else iv.lo = mid;
  }
  return sgn(a.eval(iv.hi));
}

}  // namespace weilkit
