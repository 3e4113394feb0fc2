#include "weilkit/serialize.hpp"

namespace weilkit::io {

Json encode(const Integer& x) { return x.get_str(); }

Json encode(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Json encode(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(encode(c));
  return a;
}

Json encode(const SlopeProfile& s) {
  Json a = Json::array();
  for (const auto& [slope, mult] : s) a.push_back({{"slope", encode(slope)}, {"multiplicity", mult}});
  return a;
}

std::string to_string(EndoKind k) {
  switch (k) {
    case EndoKind::Quaternion: return "quaternion";
    case EndoKind::QuaternionRealQuadratic: return "quaternion_real_quadratic";
    case EndoKind::CMField: return "cm_field";
    case EndoKind::DivisionAlgebra: return "division_algebra";
  }
  return "unknown";
}

std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Quaternion: return "quaternion";
    case AlgebraKind::CMField: return "cm_field";
    case AlgebraKind::DivisionAlgebra: return "division_algebra";
  }
  return "unknown";
}

Json encode(const LocalInvariant& li) {
  return {{"place", li.place},
          {"local_degree", li.local_degree},
          {"invariant", encode(li.invariant)},
          {"approximate", li.approximate}};
}

Json encode(const EndoDescriptor& e) {
  return {{"kind", to_string(e.kind)}, {"center_degree", e.center_degree}, {"index", e.index}, {"label", e.label}};
}

Json encode(const SimpleIsogenyClass& c) {
  Json inv = Json::array();
  for (const auto& li : c.local_invariants) inv.push_back(encode(li));
  return {{"min_poly", encode(c.min_poly)},
          {"center_degree", c.center_degree},
          {"local_invariants", inv},
          {"division_algebra_index", c.division_algebra_index},
          {"dimension", c.dimension},
          {"flavor", weilkit::to_string(c.flavor)},
          {"slopes", encode(c.slopes)},
          {"endomorphism_algebra", encode(c.endo)},
          {"approximate", c.approximate},
          {"notes", c.notes}};
}

Json encode(const CyclicLattice& lat) {
  Json basis = Json::array();
  for (const auto& row : lat.basis.to_rows()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(encode(x));
    basis.push_back(r);
  }
  return {{"n", lat.n},
          {"divisor_set", lat.divisor_set},
          {"rank", lat.rank},
          {"basis", basis},
          {"kernel_case", weilkit::to_string(kernel_case(lat).tag)}};
}

Json encode(const GaloisShape& s) {
  return {{"j", s.j}, {"h", s.h_name}, {"h_order", s.h_order}, {"h_generators", s.h_generators}};
}

Json encode(const EndoAlgebraDescriptor& e) {
  return {{"kind", to_string(e.kind)}, {"center_degree", e.center_degree}, {"index", e.index}};
}

Json encode(const DecompositionComponent& c) {
  return {{"dimension", c.dimension},
          {"multiplicity", c.multiplicity},
          {"flavor", c.flavor ? Json(weilkit::to_string(*c.flavor)) : Json(nullptr)},
          {"endomorphism_algebra", encode(c.endo)},
          {"isokummerian_class_id", c.isokummerian_class_id},
          {"representative", c.representative},
          {"slopes", encode(c.slopes)}};
}

Json encode(const DecompositionType& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back(encode(c));
  Json excluded = Json::array();
  for (const auto& e : d.excluded) excluded.push_back({{"pattern", e.pattern}, {"reason", e.reason}});
  return {{"n", d.n},
          {"case_tag", d.case_tag},
          {"components", comps},
          {"algebra", d.algebra},
          {"notes", d.notes},
          {"excluded", excluded}};
}

Json encode(const EnumeratedRow& row) {
  return {{"kernel", weilkit::to_string(row.kernel)},
          {"shape", row.shape ? encode(*row.shape) : Json(nullptr)},
          {"result", row.result ? encode(*row.result) : Json(nullptr)},
          {"rejection", row.result ? Json(nullptr) : Json(row.rejection)}};
}

Json encode(const DensityReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"trials", r.trials},
          {"estimate", encode(r.estimate)},
          {"exact", encode(r.exact)},
          {"abs_error", encode(r.abs_error)},
          {"simple_fraction", encode(r.simple_fraction)},
          {"full_count", r.full_count},
          {"simple_count", r.simple_count},
          {"full_not_simple", r.full_not_simple},
          {"sigma", r.sigma}};
}

Json encode(const CyclicCMWitness& w) {
  Json inert = Json::array();
  for (const auto& ic : w.checked_inert) {
    Json checks = Json::array();
    for (const auto& c : ic.checks) checks.push_back({{"r", c.r}, {"exponent", c.exponent}, {"residue", c.residue}});
    inert.push_back({{"l", ic.l}, {"checks", checks}});
  }
  return {{"p", w.p},
          {"d", w.d},
          {"description", w.description},
          {"checked_inert", inert},
          {"candidates_examined", w.candidates_examined}};
}

Json encode(const Error& e) {
  return {{"error", e.what()}, {"error_code", std::string(weilkit::to_string(e.code()))}, {"details", e.details()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace weilkit::io
