#pragma once

#include <string>
#include <vector>

#include "weilkit/weil.hpp"

namespace weilkit {

struct LocalInvariant {
  std::string place;
  int local_degree = 0;  // [L_w : Q_p]; 0 when unknown (clustered places)
  Rational invariant;    // in [0, 1)
  bool approximate = false;
};

enum class EndoKind {
  Quaternion,              // Q_{p,inf} over Q
  QuaternionRealQuadratic, // over Q(sqrt p), ramified at both real places
  CMField,
  DivisionAlgebra,
};

struct EndoDescriptor {
  EndoKind kind = EndoKind::CMField;
  int center_degree = 0;
  long index = 1;
  std::string label;  // e.g. "Q_{3,inf}", "Q(sqrt(-11))", "F_10", "D^{10,5}"
};

struct SimpleIsogenyClass {
  IntPoly min_poly;
  int center_degree = 0;
  std::vector<LocalInvariant> local_invariants;
  long division_algebra_index = 1;
  int dimension = 0;
  Flavor flavor = Flavor::Mixed;
  SlopeProfile slopes;  // of min_poly
  EndoDescriptor endo;
  bool approximate = false;
  std::vector<std::string> notes;
};

/// Honda-Tate data for the Weil q-number with irreducible minimal polynomial `min_poly`.
SimpleIsogenyClass honda_tate(const IntPoly& min_poly, std::uint64_t p, int f);

/// As above for a validated polynomial. X^2 - q with q a square is read as the
/// supersingular class of X - sqrt(q) (both roots give the same geometric class).
SimpleIsogenyClass honda_tate(const WeilPolynomial& w);

struct Decomposition {
  std::vector<std::pair<SimpleIsogenyClass, int>> classes;
  bool absolutely_simple = false;
  bool cm_algebra = false;
};

Decomposition decompose(const WeilPolynomial& w);

}  // namespace weilkit
