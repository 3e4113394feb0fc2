#pragma once

#include <vector>

#include "weilkit/int_poly.hpp"

namespace weilkit {

/// Sturm sequence f, f', -rem, ... with positive rescalings only.
std::vector<IntPoly> sturm_sequence(const IntPoly& f);

int sign_variations(const std::vector<IntPoly>& seq, const Rational& x);
/// Variations at +infinity (positive = true) or -infinity.
int sign_variations_at_infinity(const std::vector<IntPoly>& seq, bool positive);

/// Number of distinct real roots.
int count_real_roots(const IntPoly& f);
/// Number of distinct real roots in the closed interval [a, b].
int count_roots(const IntPoly& f, const Rational& a, const Rational& b);

/// Sign of f(c * sqrt(q)) computed exactly in Z[sqrt(q)].
int sign_at_sqrt_multiple(const IntPoly& f, const Integer& c, const Integer& q);
/// Distinct real roots of f in [c_lo*sqrt(q), c_hi*sqrt(q)].
int count_roots_sqrt_interval(const IntPoly& f, const Integer& c_lo, const Integer& c_hi, const Integer& q);

/// An open-closed interval (lo, hi] containing exactly one real root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Isolating intervals for the distinct real roots, in increasing order.
std::vector<RootInterval> isolate_real_roots(const IntPoly& f);

/// Sign of a(r) where r is the unique root of h in `iv`.
int sign_at_root(const IntPoly& a, const IntPoly& h, RootInterval iv);

}  // namespace weilkit
