#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weilkit/int_poly.hpp"

namespace weilkit {

/// Polynomial over F_l for a prime l < 2^63, ascending coefficients.
class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
  /// Reduction of an integer polynomial.
  static ModPoly reduce(const IntPoly& f, std::uint64_t modulus);
  static ModPoly constant(std::uint64_t modulus, std::uint64_t c);
  static ModPoly x(std::uint64_t modulus);

  std::uint64_t modulus() const { return l_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<size_t>(i)] : 0; }
  std::uint64_t leading() const { return c_.back(); }

  ModPoly monic() const;
  ModPoly derivative() const;
  std::uint64_t eval(std::uint64_t x) const;
  /// Symmetric lift to Z with coefficients in (-l/2, l/2].
  IntPoly lift_symmetric() const;
  IntPoly lift() const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.l_ == b.l_ && a.c_ == b.c_; }
  friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }
  ModPoly scaled(std::uint64_t s) const;

 private:
  void normalize();
  std::uint64_t l_ = 2;
  std::vector<std::uint64_t> c_;
};

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
/// Monic gcd (zero if both inputs are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct XGcd {
  ModPoly g, s, t;
};
XGcd xgcd(const ModPoly& a, const ModPoly& b);
/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);
bool is_squarefree(const ModPoly& f);

/// Monic irreducible factors with multiplicity; sorted by degree then coefficients.
std::vector<std::pair<ModPoly, int>> factor_mod(const ModPoly& f);

/// Sorted multiset of irreducible-factor degrees of f mod l (with multiplicity).
std::vector<int> factor_degrees_mod(const IntPoly& f, std::uint64_t l);

}  // namespace weilkit
