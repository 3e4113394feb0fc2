#pragma once

#include <string>
#include <vector>

#include "weilkit/matrix.hpp"

namespace weilkit {

/// Sublattice of Z^n stable under the cyclic shift e_i -> e_(i+1) with torsion-free quotient.
/// It is the ideal of Z[X]/(X^n - 1) generated by the product of Phi_d over d not in divisor_set.
struct CyclicLattice {
  int n = 0;
  std::vector<long> divisor_set;  // ascending
  IntMatrix basis;                // HNF rows
  int rank = 0;
};

bool operator==(const CyclicLattice& a, const CyclicLattice& b);

enum class KernelTag { Zero, Diagonal, SumZero, Full, General };
std::string to_string(KernelTag t);

struct KernelCase {
  KernelTag tag = KernelTag::General;
  std::vector<long> divisor_set;
};

/// The lattice attached to a set of divisors of n.
CyclicLattice cyclic_lattice(int n, const std::vector<long>& divisor_set);

/// All 2^tau(n) lattices ordered lexicographically by divisor set. Throws RankTooLarge beyond n = 24.
std::vector<CyclicLattice> saturated_cyclic_sublattices(int n);

/// Recognize the lattice spanned by the given vectors; throws InvalidArgument
/// unless their span is saturated and shift-stable.
CyclicLattice identify_lattice(int n, const std::vector<std::vector<Integer>>& vectors);

/// Four named cases for prime n, the divisor set otherwise.
KernelCase kernel_case(const CyclicLattice& lat);

/// Cyclic shift (x_1, ..., x_n) -> (x_n, x_1, ..., x_(n-1)).
std::vector<Integer> shift(const std::vector<Integer>& v);
bool is_shift_stable(const CyclicLattice& lat);
bool is_saturated(const CyclicLattice& lat);

/// Independent enumeration: kernels of g(S) for every monic divisor g of
/// X^n - 1 found by factoring over Z, as distinct HNF bases. n <= 8.
std::vector<IntMatrix> brute_force_lattices(int n);
int brute_force_count(int n);

}  // namespace weilkit
