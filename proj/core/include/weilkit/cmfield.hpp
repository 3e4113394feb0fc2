#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilkit/int_poly.hpp"

namespace weilkit {

/// One modular exponentiation l^((p-1)/r) mod p.
struct ExponentCheck {
  std::uint64_t r = 0;
  std::uint64_t exponent = 0;
  std::uint64_t residue = 0;
};

struct InertCheck {
  std::uint64_t l = 0;
  std::vector<ExponentCheck> checks;
};

/// The degree-2d subfield of the p-th cyclotomic field, with the inertness transcript.
struct CyclicCMWitness {
  std::uint64_t p = 0;
  long d = 0;
  std::string description;
  std::vector<InertCheck> checked_inert;
  std::uint64_t candidates_examined = 0;  // primes p = 1 mod 2d tried before success
};

/// Smallest prime p <= bound with p = 1 mod 2d, (p-1)/(2d) odd and coprime to 2d,
/// p not in the list, and l^((p-1)/r) != 1 mod p for every listed l and prime r | 2d.
/// Throws SearchExhausted, NotPrime for a non-prime l, InvalidArgument for bad d or an odd l | d.
CyclicCMWitness find_inert_cm_prime(long d, const std::vector<std::uint64_t>& inert_primes, std::uint64_t bound);

/// Kronecker symbol (D / l) for a prime l.
int kronecker_symbol(const Integer& disc, std::uint64_t l);

/// True iff D is a fundamental discriminant of an imaginary quadratic field.
bool is_imaginary_quadratic_discriminant(const Integer& disc);

/// Every listed prime is ramified or inert in Q(sqrt(disc)). Throws BadDiscriminant, NotPrime.
bool verify_embedding_local(const Integer& disc, const std::vector<std::uint64_t>& primes);

/// Totally real K = Q[theta]/(k_poly) with O_K = Z[theta] declared by the caller, and
/// alpha given as an integer polynomial in theta.
struct QuadraticCMSpec {
  IntPoly k_poly;
  IntPoly alpha;
  std::vector<std::uint64_t> ramified_primes;
  bool monogenic_declared = true;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CMAlphaReport {
  bool passed = false;
  std::vector<CheckOutcome> checks;
  std::vector<std::string> transcript;
};

/// Per prime of K above p, in factor order: true when X^2 + alpha should split there.
using SplitPattern = std::vector<bool>;

/// Runs the four checks: alpha totally positive, Q(alpha) = K, -alpha a non-square in every
/// residue field above each ramified prime, and the split pattern of X^2 + alpha above p
/// (skipped when the pattern is empty). Throws NotMonogenicDeclared, ReduciblePoly,
/// InvalidArgument for a non-monic or not totally real k_poly or a pattern of the wrong length.
CMAlphaReport verify_cm_quadratic_alpha(const QuadraticCMSpec& spec, std::uint64_t p, const SplitPattern& split_checks);

/// First alpha with coefficients in [-box, box] (lexicographic, constant term fastest) that
/// passes every check. Throws SearchExhausted.
IntPoly find_cm_quadratic_alpha(const QuadraticCMSpec& spec, std::uint64_t p, const SplitPattern& split_checks, long box);

/// Characteristic polynomial of multiplication by alpha on Q[theta]/(k_poly), k_poly monic.
IntPoly characteristic_polynomial(const IntPoly& k_poly, const IntPoly& alpha);

}  // namespace weilkit
