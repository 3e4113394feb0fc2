#include "weilkit/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "weilkit/error.hpp"
#include "weilkit/matrix.hpp"

namespace weilkit {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<size_t>(degree) + 1, Integer(0));
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const Integer& a) { return IntPoly(std::vector<Integer>{-a, Integer(1)}); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  // Horner on numerator/denominator to stay in Z.
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = 0;
  Integer den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  // acc = den^deg * p(x); den_pow = den^(deg+1)
  if (coeffs_.empty()) return 0;
  return make_rational(acc * den, den_pow);
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (leading() < 0) c = -c;
  std::vector<Integer> v(coeffs_.size());
  for (size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::negated() const { return scaled(-1); }

IntPoly IntPoly::scaled(const Integer& c) const {
  std::vector<Integer> v(coeffs_);
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::substitute_scaled(const Integer& c) const {
  std::vector<Integer> v(coeffs_);
  Integer pw = 1;
  for (auto& x : v) {
    x *= pw;
    pw *= c;
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reflect() const { return substitute_scaled(-1); }

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(v));
}

bool IntPoly::lex_less(const IntPoly& a, const IntPoly& b) {
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

std::string IntPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) throw Error(ErrorCode::InvalidArgument, "divmod_monic: divisor not monic");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Integer> quo(static_cast<size_t>(a.degree() - db) + 1, Integer(0));
  for (int i = a.degree(); i >= db; --i) {
    Integer c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    quo[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      mpz_submul(rem[static_cast<size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(), bc[static_cast<size_t>(j)].get_mpz_t());
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  std::vector<Integer> quo(static_cast<size_t>(a.degree() - db) + 1, Integer(0));
  for (int i = a.degree(); i >= db; --i) {
    const Integer& c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
    quo[static_cast<size_t>(i - db)] = qc;
    for (int j = 0; j <= db; ++j)
      mpz_submul(rem[static_cast<size_t>(i - db + j)].get_mpz_t(), qc.get_mpz_t(), bc[static_cast<size_t>(j)].get_mpz_t());
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "pseudo_remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  int steps = a.degree() - db + 1;
  for (int i = a.degree(); i >= db; --i) {
    Integer c = r[static_cast<size_t>(i)];
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(), bc[static_cast<size_t>(j)].get_mpz_t());
    --steps;
  }
  (void)steps;
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  Integer cont = 0;
  {
    Integer ca = a.content(), cb = b.content();
    mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? IntPoly{} : r.primitive_part();
  }
  // The primitive gcd; the integer content gcd is dropped on purpose since
  // callers only use gcd for divisibility structure.
  (void)cont;
  return u.primitive_part();
}

Integer resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) return ipow(a.leading(), static_cast<unsigned long>(n));
  if (n == 0) return ipow(b.leading(), static_cast<unsigned long>(m));
  const int size = m + n;
  IntMatrix s(size, size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = b.coeff(n - j);
  return determinant(s);
}

Integer discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "discriminant of constant");
  Integer r = resultant(f, f.derivative());
  Integer d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.degree() <= 0) return f;
  IntPoly g = gcd(f, f.derivative());
  auto q = try_divide(f, g);
  if (!q) throw Error(ErrorCode::InternalInconsistency, "gcd does not divide polynomial");
  return q->primitive_part();
}

bool is_squarefree(const IntPoly& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace weilkit
