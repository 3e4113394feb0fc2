#include "weilkit/honda_tate.hpp"

#include <numeric>

#include "weilkit/error.hpp"
#include "weilkit/factor.hpp"
#include "weilkit/mod_poly.hpp"
#include "weilkit/newton.hpp"

namespace weilkit {

namespace {

Rational frac(const Rational& r) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return r - Rational(fl);
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// Signed squarefree kernel of a nonzero integer, or nullopt when too large to factor by trial division.
std::optional<Integer> squarefree_kernel(const Integer& d) {
  Integer n = abs(d);
  if (n > Integer("1000000000000")) return std::nullopt;
  std::uint64_t m = to_u64(n);
  std::uint64_t out = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  out *= m;
  Integer k = from_u64(out);
  return d < 0 ? Integer(-k) : k;
}

Flavor flavor_of(const SlopeProfile& s, int degree) {
  if (s.size() == 1 && s.begin()->first == make_rational(1, 2)) return Flavor::Supersingular;
  SlopeProfile ord{{Rational(0), degree / 2}, {Rational(1), degree / 2}};
  if (degree % 2 == 0 && s == ord) return Flavor::Ordinary;
  return Flavor::Mixed;
}

void finish(SimpleIsogenyClass& c) {
  long d = 1;
  Rational total = 0;
  for (const auto& li : c.local_invariants) {
    d = lcm_long(d, li.invariant.get_den().get_si());
    total += li.invariant;
    if (li.approximate) c.approximate = true;
  }
  if (!c.approximate && frac(total) != 0)
    throw Error(ErrorCode::InternalInconsistency, "local invariants do not sum to 0 mod 1");
  c.division_algebra_index = d;
  c.dimension = static_cast<int>(d * c.center_degree / 2);
}

SimpleIsogenyClass real_class(const IntPoly& m, std::uint64_t p, int f) {
  SimpleIsogenyClass c;
  c.min_poly = m;
  c.center_degree = m.degree();
  c.slopes = newton_slopes(m, p, f);
  c.flavor = Flavor::Supersingular;
  const std::string ps = std::to_string(p);
  if (m.degree() == 1) {
    c.local_invariants = {{"p", 1, make_rational(1, 2), false}, {"inf", 1, make_rational(1, 2), false}};
    finish(c);
    c.endo = {EndoKind::Quaternion, 1, c.division_algebra_index, "Q_{" + ps + ",inf}"};
  } else {
    // pi = sqrt(q) with q = p^f, f odd: center Q(sqrt p), ramified at p.
    c.local_invariants = {{"p", 2, Rational(0), false},
                          {"inf1", 1, make_rational(1, 2), false},
                          {"inf2", 1, make_rational(1, 2), false}};
    finish(c);
    c.endo = {EndoKind::QuaternionRealQuadratic, 2, c.division_algebra_index, "Q(sqrt(" + ps + "))_{inf1,inf2}"};
  }
  return c;
}

SimpleIsogenyClass cm_class(const IntPoly& m, std::uint64_t p, int f) {
  SimpleIsogenyClass c;
  c.min_poly = m;
  c.center_degree = m.degree();
  c.slopes = newton_slopes(m, p, f);
  c.flavor = flavor_of(c.slopes, m.degree());

  const int g = m.degree() / 2;
  const int k = g * f + m.degree() + 16;
  const Integer pk = ipow(from_u64(p), static_cast<unsigned long>(k));
  auto fac = factor_mod(ModPoly::reduce(m, p));
  std::vector<ModPoly> pieces;
  for (const auto& [h, e] : fac) {
    ModPoly pw = ModPoly::constant(p, 1);
    for (int i = 0; i < e; ++i) pw = pw * h;
    pieces.push_back(pw);
  }
  std::vector<IntPoly> lifted = pieces.size() == 1 ? std::vector<IntPoly>{m} : hensel_lift(m, pieces, p, k);

  int label = 0;
  auto next_label = [&]() { return "w" + std::to_string(++label); };
  for (size_t i = 0; i < fac.size(); ++i) {
    const ModPoly& h = fac[i].first;
    const int e = fac[i].second;
    const IntPoly& F = lifted[i];
    Integer c0;
    mpz_fdiv_r(c0.get_mpz_t(), F.coeff(0).get_mpz_t(), pk.get_mpz_t());
    if (c0 == 0) throw Error(ErrorCode::PrecisionExhausted, "lifted constant term vanishes mod p^" + std::to_string(k));
    const bool at_zero = h.degree() == 1 && h.coeff(0) == 0;
    if (e == 1) {
      // Unramified place of degree deg h; w(pi)/w(q) = v_p(F(0)) / (deg h * f).
      int v = valuation(c0, p);
      c.local_invariants.push_back({next_label(), h.degree(), frac(make_rational(v, f)), false});
    } else if (!at_zero) {
      // Unit roots: every place above them has invariant 0.
      c.local_invariants.push_back({next_label(), 0, Rational(0), false});
    } else {
      std::vector<std::pair<long, std::optional<Rational>>> pts;
      for (int j = 0; j <= F.degree(); ++j) {
        Integer cj;
        mpz_fdiv_r(cj.get_mpz_t(), F.coeff(j).get_mpz_t(), pk.get_mpz_t());
        if (cj == 0) pts.emplace_back(j, std::nullopt);
        else pts.emplace_back(j, Rational(valuation(cj, p)));
      }
      for (const auto& [s, run] : newton_polygon(pts).slopes) {
        // Every place in this segment has local degree divisible by den(s).
        Integer b = s.get_den();
        Rational unit = Rational(b) * s / f;
        if (unit.get_den() == 1) {
          c.local_invariants.push_back({next_label(), run == b ? run : 0, Rational(0), false});
        } else if (run == b) {
          c.local_invariants.push_back({next_label(), run, frac(Rational(run) * s / f), false});
        } else {
          c.local_invariants.push_back({next_label(), 0, frac(Rational(run) * s / f), true});
        }
      }
    }
  }
  finish(c);
  if (c.division_algebra_index == 1) {
    std::string lbl = "F_" + std::to_string(c.center_degree);
    if (c.center_degree == 2) {
      if (auto k2 = squarefree_kernel(discriminant(m))) lbl = "Q(sqrt(" + k2->get_str() + "))";
    }
    c.endo = {EndoKind::CMField, c.center_degree, 1, lbl};
  } else {
    c.endo = {EndoKind::DivisionAlgebra, c.center_degree, c.division_algebra_index,
              "D^{" + std::to_string(c.center_degree) + "," + std::to_string(c.division_algebra_index) + "}"};
  }
  if (c.approximate) c.notes.push_back("ramified segment split into places is undetermined; invariants approximate");
  return c;
}

}  // namespace

SimpleIsogenyClass honda_tate(const IntPoly& min_poly, std::uint64_t p, int f) {
  if (min_poly.is_zero() || !min_poly.is_monic()) throw Error(ErrorCode::NotMonic, "minimal polynomial must be monic");
  if (!is_prime(p) || f < 1) throw Error(ErrorCode::InvalidArgument, "bad (p, f)");
  if (!is_irreducible(min_poly)) throw Error(ErrorCode::Reducible, "polynomial is reducible over Z");
  const Integer q = ipow(from_u64(p), static_cast<unsigned long>(f));
  if (min_poly.degree() == 1) {
    Integer a = -min_poly.coeff(0);
    if (a * a != q) throw Error(ErrorCode::NotWeil, "not a Weil polynomial", {"rational root is not +-sqrt(q)"});
    return real_class(min_poly, p, f);
  }
  if (min_poly == IntPoly({0, 0, 1}) - IntPoly::constant(q)) return real_class(min_poly, p, f);
  auto v = weil_violations(min_poly, p, f);
  if (!v.empty()) throw Error(ErrorCode::NotWeil, "not a Weil polynomial", v);
  return cm_class(min_poly, p, f);
}

SimpleIsogenyClass honda_tate(const WeilPolynomial& w) {
  if (is_perfect_square(w.q) && w.poly == IntPoly({0, 0, 1}) - IntPoly::constant(w.q)) {
    auto c = honda_tate(IntPoly::linear(isqrt(w.q)), w.p, w.f);
    c.notes.push_back("X^2 - q with q square: the two rational roots +-sqrt(q) give one geometric supersingular class");
    return c;
  }
  return honda_tate(w.poly, w.p, w.f);
}

Decomposition decompose(const WeilPolynomial& w) {
  Decomposition out;
  auto fac = factor_over_integers(w.poly);
  out.cm_algebra = is_squarefree(w.poly);
  std::optional<Integer> s;
  if (is_perfect_square(w.q)) s = isqrt(w.q);
  // Odd powers of X - s and X + s are paired into one geometric class.
  int plus = 0, minus = 0;
  for (const auto& [m, e] : fac) {
    if (s && m == IntPoly::linear(*s)) plus = e;
    if (s && m == IntPoly::linear(-*s)) minus = e;
  }
  bool paired = s && plus % 2 == 1 && minus % 2 == 1;
  for (const auto& [m, e] : fac) {
    int exp = e;
    if (paired && m.degree() == 1) {
      --exp;
      if (m == IntPoly::linear(*s)) {
        WeilPolynomial pair = w;
        pair.poly = IntPoly({0, 0, 1}) - IntPoly::constant(w.q);
        pair.g = 1;
        pair.epsilon = -1;
        out.classes.emplace_back(honda_tate(pair), 1);
      }
      if (exp == 0) continue;
    }
    SimpleIsogenyClass c = honda_tate(m, w.p, w.f);
    if (exp % c.division_algebra_index != 0)
      throw Error(ErrorCode::NotIsogenyClass,
                  "multiplicity of " + m.to_string() + " is not divisible by the index " + std::to_string(c.division_algebra_index));
    const int mult = exp / static_cast<int>(c.division_algebra_index);
    out.classes.emplace_back(std::move(c), mult);
  }
  out.absolutely_simple = out.classes.size() == 1 && out.classes[0].second == 1 && out.cm_algebra && is_weakly_neat(w);
  int total = 0;
  for (const auto& [c, mult] : out.classes) total += c.dimension * mult;
  if (total != w.g) throw Error(ErrorCode::InternalInconsistency, "class dimensions do not sum to g");
  return out;
}

}  // namespace weilkit
