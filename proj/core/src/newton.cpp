#include "weilkit/newton.hpp"

#include <algorithm>
#include <map>

#include "weilkit/error.hpp"

namespace weilkit {

NewtonPolygonData newton_polygon(const std::vector<std::pair<long, std::optional<Rational>>>& points) {
  std::vector<std::pair<long, Rational>> pts;
  bool zero_finite = false;
  for (const auto& [i, v] : points) {
    if (!v) continue;
    if (i == 0) zero_finite = true;
    pts.emplace_back(i, *v);
  }
  if (pts.size() < 2 || !zero_finite)
    throw Error(ErrorCode::InsufficientPoints, "need at least two finite points including index 0");
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i].first == pts[i - 1].first) throw Error(ErrorCode::InvalidArgument, "duplicate index in Newton polygon");

  // Monotone chain, lower hull only.
  std::vector<std::pair<long, Rational>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b if it lies on or above segment a -> pt.
      Rational cross = (b.second - a.second) * (pt.first - a.first) - (pt.second - a.second) * (b.first - a.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  NewtonPolygonData out;
  out.vertices = hull;
  std::map<Rational, int> runs;
  for (size_t i = 1; i < hull.size(); ++i) {
    long run = hull[i].first - hull[i - 1].first;
    Rational slope = (hull[i].second - hull[i - 1].second) / Rational(run);
    runs[-slope] += static_cast<int>(run);
  }
  out.slopes.assign(runs.begin(), runs.end());
  return out;
}

NewtonPolygonData newton_polygon(const IntPoly& f, std::uint64_t p) {
  std::vector<std::pair<long, std::optional<Rational>>> pts;
  for (int i = 0; i <= f.degree(); ++i) {
    const Integer& c = f.coeffs()[static_cast<size_t>(i)];
    if (c == 0) pts.emplace_back(i, std::nullopt);
    else pts.emplace_back(i, Rational(valuation(c, p)));
  }
  return newton_polygon(pts);
}

}  // namespace weilkit
