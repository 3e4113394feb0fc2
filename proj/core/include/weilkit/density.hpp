#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "weilkit/integer.hpp"
#include "weilkit/lattice.hpp"

namespace weilkit {

/// Counter-based SplitMix64 stream keyed by (seed, trial); each trial owns an
/// independent stream, so results do not depend on scheduling.
class SplitMix64 {
 public:
  SplitMix64(std::uint64_t seed, std::uint64_t trial);
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// A sign vector in (Z/2)^n as a bit mask (bit i set = coordinate i flipped).
using SignMask = std::uint32_t;
using PermGens = std::vector<std::vector<int>>;

/// Probability that k uniform vectors span (Z/2)^n: prod_{i<n} (1 - 2^(i-k)). n <= 16, k <= 64.
Rational exact_generation_probability(int n, int k);

/// Rank over F_2 of the span of the masks.
int f2_rank(const std::vector<SignMask>& masks);

/// True iff the sign flips in w_prime together with H act transitively on the 2^n
/// hypercube vertices. Throws UnsupportedKernel unless kernel is Zero.
bool is_simple_given_image(int n, const std::vector<SignMask>& w_prime, const PermGens& h, KernelTag kernel);

struct DensityReport {
  int n = 0;
  int k = 0;
  std::uint64_t trials = 0;
  Rational estimate;
  Rational exact;
  Rational abs_error;
  Rational simple_fraction;
  std::uint64_t full_count = 0;
  std::uint64_t simple_count = 0;
  std::uint64_t full_not_simple = 0;  // full image but not transitive; always 0
  double sigma = 0;                   // sqrt(p (1 - p) / trials) at p = exact
};

/// Draws one element of (Z/2)^n from the stream; the default is uniform.
using DrawSampler = std::function<SignMask(SplitMix64&, int n)>;

struct SimulateOptions {
  unsigned threads = 0;  // 0: WEILKIT_THREADS, else hardware concurrency
  DrawSampler sampler;   // empty: uniform
};

/// Monte Carlo estimate of the full-image probability. Throws NonTransitiveH when H
/// is not transitive on n points and InvalidArgument on bad sizes.
DensityReport simulate(int n, const PermGens& h, int k, std::uint64_t trials, std::uint64_t seed,
                       const SimulateOptions& opts = {});

/// Thread count after applying WEILKIT_THREADS (0 or unset: hardware concurrency).
unsigned resolve_threads(unsigned requested);

}  // namespace weilkit
