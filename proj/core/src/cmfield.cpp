#include "weilkit/cmfield.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "weilkit/error.hpp"
#include "weilkit/factor.hpp"
#include "weilkit/integer.hpp"
#include "weilkit/matrix.hpp"
#include "weilkit/mod_poly.hpp"
#include "weilkit/sturm.hpp"

namespace weilkit {

namespace {

std::string poly_str(const IntPoly& f) {
  std::string s;
  for (int i = f.degree(); i >= 0; --i) {
    const Integer& c = f.coeffs()[static_cast<size_t>(i)];
    if (c == 0) continue;
    std::string mag = to_string(Integer(abs(c)));
    std::string term = i == 0 ? mag : (abs(c) == 1 ? "" : mag + "*") + (i == 1 ? "t" : "t^" + std::to_string(i));
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    s += term;
  }
  return s.empty() ? "0" : s;
}

std::string mod_str(const ModPoly& f) { return poly_str(f.lift()); }

void require_prime(std::uint64_t l) {
  if (!is_prime(l)) throw Error(ErrorCode::NotPrime, std::to_string(l) + " is not prime");
}

bool squarefree_u64(std::uint64_t n) {
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return false;
  }
  return true;
}

// Residue fields O_K / lambda for lambda | l, as the distinct irreducible factors of k_poly mod l.
std::vector<ModPoly> residue_moduli(const IntPoly& k_poly, std::uint64_t l) {
  std::vector<ModPoly> out;
  for (const auto& [g, e] : factor_mod(ModPoly::reduce(k_poly, l))) {
    (void)e;
    out.push_back(g);
  }
  return out;
}

enum class QuadraticResidue { Zero, Square, NonSquare };

// Euler's criterion in F_l[t]/(g), l odd.
QuadraticResidue residue_class(const ModPoly& a, const ModPoly& g, std::uint64_t l) {
  ModPoly r = a % g;
  if (r.is_zero()) return QuadraticResidue::Zero;
  Integer q = ipow(from_u64(l), static_cast<unsigned long>(g.degree()));
  ModPoly e = powmod(r, (q - 1) / 2, g);
  return e.is_one() ? QuadraticResidue::Square : QuadraticResidue::NonSquare;
}

}  // namespace

CyclicCMWitness find_inert_cm_prime(long d, const std::vector<std::uint64_t>& inert_primes, std::uint64_t bound) {
  if (d < 1 || d % 2 == 0) throw Error(ErrorCode::InvalidArgument, "d must be an odd positive integer");
  const std::uint64_t two_d = 2 * static_cast<std::uint64_t>(d);
  std::set<std::uint64_t> distinct;
  for (std::uint64_t l : inert_primes) {
    require_prime(l);
    // l = 2 is allowed: it never ramifies in a subfield of the p-th cyclotomic field.
    if (l != 2 && two_d % l == 0) throw Error(ErrorCode::InvalidArgument, "inert prime " + std::to_string(l) + " divides d");
    if (!distinct.insert(l).second) throw Error(ErrorCode::InvalidArgument, "inert primes must be distinct");
  }
  const auto rs = prime_divisors(two_d);
  CyclicCMWitness w;
  w.d = d;
  for (std::uint64_t p = two_d + 1; p <= bound; p += two_d) {
    if (!is_prime(p)) continue;
    std::uint64_t m = (p - 1) / two_d;
    if (m % 2 == 0 || std::gcd(m, two_d) != 1) continue;
    if (distinct.count(p)) continue;  // l = p ramifies
    ++w.candidates_examined;
    std::vector<InertCheck> checks;
    bool ok = true;
    for (std::uint64_t l : inert_primes) {
      InertCheck ic{l, {}};
      for (std::uint64_t r : rs) {
        std::uint64_t e = (p - 1) / r;
        std::uint64_t v = pow_mod(l % p, e, p);
        ic.checks.push_back({r, e, v});
        if (v == 1) ok = false;
      }
      checks.push_back(std::move(ic));
      if (!ok) break;
    }
    if (!ok) continue;
    w.p = p;
    w.description = "degree-" + std::to_string(two_d) + " subfield of the " + std::to_string(p) + "-th cyclotomic field";
    w.checked_inert = std::move(checks);
    return w;
  }
  throw Error(ErrorCode::SearchExhausted, "no admissible prime up to " + std::to_string(bound));
}

int kronecker_symbol(const Integer& disc, std::uint64_t l) {
  require_prime(l);
  if (l == 2) {
    if (disc % 2 == 0) return 0;
    std::uint64_t r = mod_u64(disc, 8);
    return r == 1 || r == 7 ? 1 : -1;
  }
  std::uint64_t a = mod_u64(disc, l);
  if (a == 0) return 0;
  return pow_mod(a, (l - 1) / 2, l) == 1 ? 1 : -1;
}

bool is_imaginary_quadratic_discriminant(const Integer& disc) {
  if (disc >= 0) return false;
  Integer m = -disc;
  if (m > Integer("1000000000000")) throw Error(ErrorCode::BadDiscriminant, "discriminant too large to certify squarefree");
  std::uint64_t n = to_u64(m);
  if (n % 4 == 3) return squarefree_u64(n);  // D = 1 mod 4
  if (n % 4 != 0) return false;
  std::uint64_t k = n / 4;  // D/4 = -k must be 2 or 3 mod 4
  if (k % 4 != 1 && k % 4 != 2) return false;
  return squarefree_u64(k);
}

bool verify_embedding_local(const Integer& disc, const std::vector<std::uint64_t>& primes) {
  if (!is_imaginary_quadratic_discriminant(disc))
    throw Error(ErrorCode::BadDiscriminant, to_string(disc) + " is not an imaginary quadratic discriminant");
  bool ok = true;
  for (std::uint64_t l : primes) ok = kronecker_symbol(disc, l) != 1 && ok;
  return ok;
}

IntPoly characteristic_polynomial(const IntPoly& k_poly, const IntPoly& alpha) {
  if (!k_poly.is_monic() || k_poly.degree() < 1) throw Error(ErrorCode::InvalidArgument, "defining polynomial must be monic");
  const int n = k_poly.degree();
  // Column j holds alpha * theta^j reduced mod k_poly.
  IntMatrix m(n, n);
  IntPoly col = divmod_monic(alpha, k_poly).second;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m(i, j) = col.coeff(i);
    col = divmod_monic(col * IntPoly::x(), k_poly).second;
  }
  // Newton identities from the power traces.
  std::vector<Rational> s(static_cast<size_t>(n + 1)), e(static_cast<size_t>(n + 1));
  IntMatrix pw = m;
  for (int k = 1; k <= n; ++k) {
    Integer tr = 0;
    for (int i = 0; i < n; ++i) tr += pw(i, i);
    s[static_cast<size_t>(k)] = Rational(tr);
    if (k < n) pw = pw * m;
  }
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) {
      Rational t = e[static_cast<size_t>(k - i)] * s[static_cast<size_t>(i)];
      acc += i % 2 ? t : Rational(-t);
    }
    e[static_cast<size_t>(k)] = acc / k;
  }
  std::vector<Integer> c(static_cast<size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    Rational v = k % 2 ? Rational(-e[static_cast<size_t>(k)]) : e[static_cast<size_t>(k)];
    if (v.get_den() != 1) throw Error(ErrorCode::InternalInconsistency, "non-integral characteristic polynomial");
    c[static_cast<size_t>(n - k)] = v.get_num();
  }
  return IntPoly(c);
}

CMAlphaReport verify_cm_quadratic_alpha(const QuadraticCMSpec& spec, std::uint64_t p, const SplitPattern& split_checks) {
  if (!spec.monogenic_declared)
    throw Error(ErrorCode::NotMonogenicDeclared, "O_K = Z[theta] must be declared by the caller");
  const IntPoly& f = spec.k_poly;
  if (!f.is_monic() || f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "defining polynomial must be monic");
  if (!is_irreducible(f)) throw Error(ErrorCode::ReduciblePoly, "defining polynomial " + poly_str(f) + " is reducible");
  auto roots = isolate_real_roots(f);
  if (static_cast<int>(roots.size()) != f.degree()) throw Error(ErrorCode::InvalidArgument, "K is not totally real");
  require_prime(p);
  if (p == 2) throw Error(ErrorCode::InvalidArgument, "p must be odd");
  for (std::uint64_t l : spec.ramified_primes) require_prime(l);
  const IntPoly alpha = divmod_monic(spec.alpha, f).second;

  CMAlphaReport rep;
  auto& tr = rep.transcript;
  tr.push_back("K = Q[t]/(" + poly_str(f) + "), alpha = " + poly_str(alpha));
  Integer disc = discriminant(f);
  Integer square_factor = 0;
  for (std::uint64_t q = 2; q < 10000 && square_factor == 0; q = next_prime(q))
    if (disc % (Integer(static_cast<unsigned long>(q)) * static_cast<unsigned long>(q)) == 0)
      square_factor = static_cast<unsigned long>(q);
  tr.push_back("disc = " + to_string(disc) +
               (square_factor == 0 ? ", no square factor below 10^4"
                                   : ", divisible by " + to_string(square_factor) + "^2; Z[t] = O_K is assumed as declared"));

  // (1) alpha is positive at every real embedding.
  CheckOutcome c1{"totally positive", true, ""};
  for (size_t i = 0; i < roots.size(); ++i) {
    int sg = sign_at_root(alpha, f, roots[i]);
    c1.detail += (i ? ", " : "") + std::string("sign at root in (") + to_string(roots[i].lo) + ", " +
                 to_string(roots[i].hi) + "] = " + std::to_string(sg);
    if (sg <= 0) c1.passed = false;
  }
  rep.checks.push_back(c1);

  // (2) Q(alpha) = K iff the characteristic polynomial is squarefree.
  IntPoly chi = characteristic_polynomial(f, alpha);
  CheckOutcome c2{"generates K", gcd(chi, chi.derivative()).degree() == 0, "charpoly " + poly_str(chi)};
  rep.checks.push_back(c2);

  // (3) -alpha is a non-square in every residue field above each ramified prime.
  CheckOutcome c3{"non-square at ramified primes", true, ""};
  for (std::uint64_t l : spec.ramified_primes) {
    if (l == 2) {
      c3.passed = false;
      c3.detail += "l = 2: every element of a field of characteristic 2 is a square; ";
      continue;
    }
    ModPoly neg = ModPoly::reduce(alpha.negated(), l);
    for (const auto& g : residue_moduli(f, l)) {
      auto cls = residue_class(neg, g, l);
      bool ok = cls == QuadraticResidue::NonSquare;
      c3.passed = c3.passed && ok;
      c3.detail += "l = " + std::to_string(l) + ", lambda = (" + mod_str(g) + "), F_" + std::to_string(l) + "^" +
                   std::to_string(g.degree()) + ": -alpha " +
                   (cls == QuadraticResidue::Zero ? "vanishes" : ok ? "is a non-square" : "is a square") + "; ";
    }
  }
  rep.checks.push_back(c3);

  // (4) Split pattern of X^2 + alpha above p.
  auto above = residue_moduli(f, p);
  if (!split_checks.empty() && split_checks.size() != above.size())
    throw Error(ErrorCode::InvalidArgument, "split pattern has " + std::to_string(split_checks.size()) + " entries but " +
                                                std::to_string(above.size()) + " primes lie above p");
  CheckOutcome c4{"split pattern at p", true, ""};
  ModPoly neg = ModPoly::reduce(alpha.negated(), p);
  for (size_t i = 0; i < above.size(); ++i) {
    auto cls = residue_class(neg, above[i], p);
    std::string seen = cls == QuadraticResidue::Square ? "splits" : cls == QuadraticResidue::NonSquare ? "inert" : "ramified";
    c4.detail += "lambda = (" + mod_str(above[i]) + "): " + seen;
    if (!split_checks.empty()) {
      bool want = split_checks[i];
      bool ok = want ? cls == QuadraticResidue::Square : cls == QuadraticResidue::NonSquare;
      c4.passed = c4.passed && ok;
      c4.detail += std::string(" (expected ") + (want ? "splits" : "inert") + ")";
    }
    c4.detail += "; ";
  }
  if (split_checks.empty()) c4.detail += "no pattern requested";
  rep.checks.push_back(c4);

  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckOutcome& c) { return c.passed; });
  for (const auto& c : rep.checks) tr.push_back(c.name + ": " + (c.passed ? "pass" : "fail") + " [" + c.detail + "]");
  tr.push_back("not certified: the Galois group of the closure being (Z/2)^N");
  return rep;
}

IntPoly find_cm_quadratic_alpha(const QuadraticCMSpec& spec, std::uint64_t p, const SplitPattern& split_checks, long box) {
  if (box < 0) throw Error(ErrorCode::InvalidArgument, "box must be non-negative");
  const int n = spec.k_poly.degree();
  std::vector<long> c(static_cast<size_t>(n), -box);
  while (true) {
    QuadraticCMSpec s = spec;
    s.alpha = IntPoly(std::vector<Integer>(c.begin(), c.end()));
    if (verify_cm_quadratic_alpha(s, p, split_checks).passed) return s.alpha;
    int i = 0;
    while (i < n && c[static_cast<size_t>(i)] == box) c[static_cast<size_t>(i++)] = -box;
    if (i == n) break;
    ++c[static_cast<size_t>(i)];
  }
  throw Error(ErrorCode::SearchExhausted, "no alpha with coefficients in [-" + std::to_string(box) + ", " +
                                              std::to_string(box) + "]");
}

}  // namespace weilkit
