#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weilkit/honda_tate.hpp"
#include "weilkit/hyperoct.hpp"

namespace weilkit {

enum class AlgebraKind { Quaternion, CMField, DivisionAlgebra };

/// Endomorphism algebra of one simple factor: Q_{p,inf}, a CM field F_d, or a
/// central division algebra D^{d,j} of index j over a CM field of degree d.
struct EndoAlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::CMField;
  int center_degree = 1;
  int index = 1;
};

struct DecompositionComponent {
  int dimension = 0;
  int multiplicity = 0;
  std::optional<Flavor> flavor;  // nullopt when the shape does not determine it
  EndoAlgebraDescriptor endo;
  int isokummerian_class_id = 0;
  Weight representative;         // a hypercube vertex whose eigenvalue this factor carries
  SlopeProfile slopes;           // empty when undetermined
};

struct ExcludedPattern {
  std::string pattern;
  std::string reason;
};

struct DecompositionType {
  int n = 0;
  int case_tag = 0;  // 1..6 at n = 5, 0 otherwise
  std::vector<DecompositionComponent> components;
  std::string algebra;  // product label such as "F_2 x F_10 x F_20"
  std::vector<std::string> notes;
  std::vector<ExcludedPattern> excluded;
};

/// Optional (j, H); Full and SumZero ignore it.
using ShapeArg = std::optional<GaloisShape>;

/// The rank-6 taxonomy. Throws Inconsistent with the reason when the input cannot occur.
DecompositionType classify_rank6(KernelTag kernel, const ShapeArg& shape);

/// Prime n in {3, 5, 7}; n = 5 delegates to classify_rank6, other n use Galois orbits.
DecompositionType classify_prime_rank(int n, KernelTag kernel, const ShapeArg& shape);

/// Orbit-derived decomposition for any prime n in {3, 5, 7}, without the rank-6 rules.
DecompositionType classify_by_orbits(int n, KernelTag kernel, const ShapeArg& shape);

/// {j in 1..n : 2^(j-1) = 1 mod n}.
std::vector<int> accepted_sign_ranks(int n);

/// Multiplicities of slope 1/2 realized by admissible assignments on the kernel.
std::vector<int> admissible_half_multiplicities(int n, KernelTag kernel);

/// A simple factor of the given dimension whose center has the given degree has
/// index 2 * dimension / center_degree; it must divide the lcm of the slope denominators.
bool division_index_compatible(int dimension, int center_degree, const SlopeProfile& slopes);

/// Product label of the endomorphism algebra, e.g. "F_2 x D_1^{2,5} x Mat_2(D_2^{2,5})".
std::string algebra_label(const std::vector<DecompositionComponent>& comps);

struct EnumeratedRow {
  KernelTag kernel;
  std::optional<GaloisShape> shape;
  std::optional<DecompositionType> result;
  std::string rejection;  // set when result is empty
};

/// Every kernel paired with every shape of galois_shapes(n) (one row with no shape for Full and SumZero).
std::vector<EnumeratedRow> enumerate_table(int n);

struct ConcreteComponent {
  int dimension = 0;
  int multiplicity = 0;
  std::optional<Flavor> flavor;
  SlopeProfile slopes;  // of the factor's own Weil polynomial, may be empty
};

struct ConcreteMatch {
  bool consistent = false;
  int case_tag = 0;
  std::string reason;
};

/// Match a concrete decomposition of total dimension 16 against the six rank-6 types.
/// Throws WrongDimension otherwise.
ConcreteMatch classify_concrete(const std::vector<ConcreteComponent>& comps);
ConcreteMatch classify_concrete(const Decomposition& decomp);

KernelTag parse_kernel_tag(const std::string& s);

/// The lattice of a named kernel case for prime n.
CyclicLattice kernel_lattice(int n, KernelTag tag);

/// Hypercube vertices ordered by number of -1 entries, then by the positions of the -1 entries.
std::vector<Weight> hypercube_vertices(int n);

}  // namespace weilkit
