#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "weilkit/int_poly.hpp"

namespace weilkit {

struct NewtonPolygonData {
  /// Lower-hull vertices (index, valuation), strictly increasing in index.
  std::vector<std::pair<long, Rational>> vertices;
  /// Root valuations (negated hull slopes), ascending, with horizontal run.
  std::vector<std::pair<Rational, int>> slopes;
};

/// Lower convex hull of the finite points; infinite valuations are nullopt.
NewtonPolygonData newton_polygon(const std::vector<std::pair<long, std::optional<Rational>>>& points);

/// Newton polygon of f at p from the p-adic valuations of its coefficients.
NewtonPolygonData newton_polygon(const IntPoly& f, std::uint64_t p);

}  // namespace weilkit
