#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weilkit/integer.hpp"

namespace weilkit {

/// Univariate polynomial over Z, coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int degree);
  static IntPoly x() { return monomial(1, 1); }
  /// X - a
  static IntPoly linear(const Integer& a);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of X^i, zero beyond the degree.
  Integer coeff(int i) const;
  const Integer& leading() const;

  IntPoly derivative() const;
  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;
  Integer content() const;
  /// Content removed, leading coefficient made positive.
  IntPoly primitive_part() const;
  IntPoly negated() const;
  IntPoly scaled(const Integer& c) const;
  /// p(c*X)
  IntPoly substitute_scaled(const Integer& c) const;
  /// p(-X)
  IntPoly reflect() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /// Lexicographic order on coefficient vectors starting from the constant term.
  static bool lex_less(const IntPoly& a, const IntPoly& b);

  std::string to_string(const char* var = "X") const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPoly pow(const IntPoly& p, unsigned e);

/// Quotient and remainder for a monic divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b);

/// a / b when b divides a exactly in Z[X], otherwise nullopt.
std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// gcd in Z[X], primitive with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Resultant via Sylvester-matrix determinant (fraction-free).
Integer resultant(const IntPoly& a, const IntPoly& b);
Integer discriminant(const IntPoly& f);

/// Squarefree part of a monic polynomial (product of its distinct irreducible factors).
IntPoly squarefree_part(const IntPoly& f);
bool is_squarefree(const IntPoly& f);

}  // namespace weilkit
