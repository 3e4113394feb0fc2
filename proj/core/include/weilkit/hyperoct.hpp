#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilkit/lattice.hpp"
#include "weilkit/weil.hpp"

namespace weilkit {

using Weight = std::vector<long>;

/// Element of {+-1}^n x| S_n acting on Z^n by w -> signs * (w permuted), where
/// coordinate i of w moves to position perm[i] (0-based).
struct SignedPerm {
  std::vector<int> signs;
  std::vector<int> perm;

  static SignedPerm identity(int n);
  static SignedPerm negation(int n);
  static SignedPerm cycle(int n);  // i -> i + 1 mod n
  static SignedPerm from_perm(std::vector<int> perm);
  static SignedPerm from_signs(std::vector<int> signs);

  int n() const { return static_cast<int>(perm.size()); }
  Weight act(const Weight& w) const;
  std::vector<Integer> act(const std::vector<Integer>& w) const;
  SignedPerm inverse() const;
  bool is_pure_sign() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
};

/// a * b acts as a after b.
SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);

struct SignedPermGroup {
  int n = 0;
  std::vector<SignedPerm> generators;
  std::vector<std::uint64_t> codes;     // packed elements, sorted
  int sign_rank = 0;                     // log2 of |G meet {+-1}^n|
  std::vector<std::vector<int>> shadow;  // image in S_n, sorted
  bool split = false;                    // G = (G meet {+-1}^n) x| H with H lifted by trivial signs

  size_t order() const { return codes.size(); }
  /// Materialized element list.
  std::vector<SignedPerm> elements() const;
  bool contains(const SignedPerm& g) const;
  bool contains_negation() const;
  bool shadow_transitive() const;
};

/// Closure of the generators. Throws TooLarge beyond n = 8, InvalidArgument on mixed sizes.
SignedPermGroup generate(const std::vector<SignedPerm>& gens);

/// Conjugate every generator by c.
SignedPermGroup conjugate(const SignedPermGroup& g, const SignedPerm& c);

/// phi(e_i) = coefficients[i]; phi vanishes on the kernel. Slope of weight w is 1/2 + phi(w).
struct ValuationAssignment {
  std::vector<Rational> coefficients;
  SlopeProfile profile;
};

struct SymbolicFrobenius {
  int n = 0;
  CyclicLattice kernel;
  SignedPermGroup group;
  std::optional<ValuationAssignment> assignment;
};

/// Canonical image of a weight in Z^n / kernel.
std::vector<Integer> weight_image(const CyclicLattice& kernel, const Weight& w);

/// A Frobenius model; throws UnstableKernel when some generator moves the kernel.
SymbolicFrobenius make_frobenius(const CyclicLattice& kernel, const SignedPermGroup& group);

/// Orbits of the group on the distinct images of the 2^n hypercube vertices.
/// Each orbit is a sorted list of canonical images; orbits sorted by first element.
std::vector<std::vector<std::vector<Integer>>> orbits_on_weights(const SymbolicFrobenius& sf);

/// Admissible valuation assignments for prime n, one per orbit of translates
/// under negation and the n-cycle. Coefficients range over (1/d)Z for d up to
/// denominator_bound (default 2n).
std::vector<ValuationAssignment> slope_assignment(const CyclicLattice& kernel, int n, int denominator_bound = 0);

/// Candidate Galois shapes: H transitive containing an n-cycle, up to conjugacy, paired with j = 1..n.
struct GaloisShape {
  int j = 0;
  std::string h_name;                  // C5, D5, F20, A5, S5, ...
  std::vector<std::vector<int>> h_generators;
  size_t h_order = 0;
};
std::vector<GaloisShape> transitive_shadows(int n);  // j left at 0
std::vector<GaloisShape> galois_shapes(int n);

/// {+-1}^j x| H realized on the hypercube: sign part spanned by the H-orbit of a j-dimensional
/// stable subspace containing -1. Throws Inconsistent when no H-stable sign subgroup of rank j contains -1.
SignedPermGroup shape_group(int n, const GaloisShape& shape);

/// Subgroups generated by the orbits together with the image of (1, ..., 1) coincide.
bool isokummerian_equiv(const SymbolicFrobenius& sf, const std::vector<std::vector<Integer>>& orbit1,
                        const std::vector<std::vector<Integer>>& orbit2);

}  // namespace weilkit
