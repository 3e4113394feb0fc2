#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weilkit/int_poly.hpp"
#include "weilkit/mod_poly.hpp"

namespace weilkit {

/// The d-th cyclotomic polynomial.
IntPoly cyclotomic(long d);

/// Lift a factorization f = prod(factors) mod p of a monic f, with the
/// factors monic and pairwise coprime mod p, to a factorization mod p^k.
/// Returned polynomials are monic with coefficients in [0, p^k).
std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors, std::uint64_t p, int k);

/// Squarefree decomposition of a monic polynomial over Z: pairs (g_i, i)
/// with f = prod g_i^i and each g_i squarefree, monic, pairwise coprime.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

/// Irreducible monic factors with multiplicity, sorted by degree then by
/// coefficient vector (constant term first). Degree at most 64.
std::vector<std::pair<IntPoly, int>> factor_over_integers(const IntPoly& f);

bool is_irreducible(const IntPoly& f);

}  // namespace weilkit
