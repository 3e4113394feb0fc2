#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weilkit/int_poly.hpp"

namespace weilkit {

/// Slope -> multiplicity, slopes normalized so that v(q) = 1.
using SlopeProfile = std::map<Rational, int>;

enum class Flavor { Ordinary, Supersingular, Mixed };
std::string to_string(Flavor f);

struct WeilPolynomial {
  IntPoly poly;
  std::uint64_t p = 0;
  int f = 0;
  Integer q;
  int g = 0;
  int epsilon = 1;  // constant term / q^g
};

/// Every failed Weil check, empty when the polynomial is a Weil q-polynomial.
/// Throws NotMonic, OddDegree, DegreeTooLarge or InvalidArgument for malformed input.
std::vector<std::string> weil_violations(const IntPoly& poly, std::uint64_t p, int f);

/// Validated value; throws NotWeil carrying every violation as details.
WeilPolynomial validate_weil(const IntPoly& poly, std::uint64_t p, int f);

SlopeProfile newton_slopes(const WeilPolynomial& w);
/// Slopes of an arbitrary monic polynomial with nonzero constant term at p, divided by f.
SlopeProfile newton_slopes(const IntPoly& poly, std::uint64_t p, int f);

struct ReductionFlavor {
  Flavor kind = Flavor::Mixed;
  SlopeProfile profile;
};
ReductionFlavor reduction_flavor(const WeilPolynomial& w);

/// No ratio of two distinct roots is a nontrivial root of unity.
bool is_weakly_neat(const WeilPolynomial& w);
bool is_weakly_neat(const IntPoly& poly);

/// p splits completely in Q[X]/(poly); throws Reducible unless poly is irreducible.
bool splitting_test(const WeilPolynomial& w);
bool splitting_test(const IntPoly& poly, std::uint64_t p);

}  // namespace weilkit
