#include "weilkit/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "weilkit/error.hpp"

namespace weilkit {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_perms(int n, const PermGens& h) {
  for (const auto& p : h) {
    if (static_cast<int>(p.size()) != n) throw Error(ErrorCode::InvalidArgument, "permutation of wrong length");
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i)
      if (s[static_cast<size_t>(i)] != i) throw Error(ErrorCode::InvalidArgument, "generator is not a permutation of 0..n-1");
  }
}

bool transitive_on_points(int n, const PermGens& h) {
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& p : h) {
      int y = p[static_cast<size_t>(x)];
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

SignMask permute_mask(const std::vector<int>& p, SignMask v) {
  SignMask r = 0;
  for (size_t i = 0; i < p.size(); ++i)
    if ((v >> i) & 1u) r |= SignMask{1} << p[i];
  return r;
}

}  // namespace

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t trial) : state_(mix64(seed) ^ mix64(trial * kGamma + 1)) {}

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix64(state_);
}

Rational exact_generation_probability(int n, int k) {
  if (n < 0 || n > 16 || k < 0 || k > 64) throw Error(ErrorCode::InvalidArgument, "need 0 <= n <= 16 and 0 <= k <= 64");
  Rational p = 1;
  for (int i = 0; i < n; ++i) {
    if (i >= k) return Rational(0);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(k - i));
    p *= Rational(den - 1, den);
  }
  p.canonicalize();
  return p;
}

int f2_rank(const std::vector<SignMask>& masks) {
  SignMask pivot[32] = {};  // pivot[b] has top bit b
  int rank = 0;
  for (SignMask v : masks) {
    while (v) {
      int b = 31 - __builtin_clz(v);
      if (!pivot[b]) {
        pivot[b] = v;
        ++rank;
        break;
      }
      v ^= pivot[b];
    }
  }
  return rank;
}

namespace {

// Flips translate and H acts linearly, so the orbit of vertex 0 is the smallest
// H-stable subspace containing W'; transitivity means that subspace is everything.
bool stable_span_is_full(int n, const std::vector<SignMask>& w_prime, const PermGens& h) {
  SignMask pivot[32] = {};
  SignMask basis[32];
  int rank = 0;
  auto insert = [&](SignMask v) {
    SignMask orig = v;
    while (v) {
      int b = 31 - __builtin_clz(v);
      if (!pivot[b]) {
        pivot[b] = v;
        basis[rank++] = orig;
        return;
      }
      v ^= pivot[b];
    }
  };
  for (SignMask w : w_prime) {
    insert(w);
    if (rank == n) return true;
  }
  for (int i = 0; i < rank && rank < n; ++i)
    for (const auto& p : h) insert(permute_mask(p, basis[i]));
  return rank == n;
}

}  // namespace

bool is_simple_given_image(int n, const std::vector<SignMask>& w_prime, const PermGens& h, KernelTag kernel) {
  if (kernel != KernelTag::Zero)
    throw Error(ErrorCode::UnsupportedKernel, "only the zero kernel is supported; use the orbit engine for other kernels");
  if (n < 1 || n > 16) throw Error(ErrorCode::InvalidArgument, "need 1 <= n <= 16");
  check_perms(n, h);
  const SignMask limit = SignMask{1} << n;
  for (SignMask w : w_prime)
    if (w >= limit) throw Error(ErrorCode::InvalidArgument, "sign vector has bits beyond n");
  return stable_span_is_full(n, w_prime, h);
}

unsigned resolve_threads(unsigned requested) {
  if (requested == 0) {
    if (const char* env = std::getenv("WEILKIT_THREADS")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0') requested = static_cast<unsigned>(v);
    }
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

DensityReport simulate(int n, const PermGens& h, int k, std::uint64_t trials, std::uint64_t seed,
                       const SimulateOptions& opts) {
  if (n < 1 || n > 16) throw Error(ErrorCode::InvalidArgument, "need 1 <= n <= 16");
  if (k < 0 || k > 64) throw Error(ErrorCode::InvalidArgument, "need 0 <= k <= 64");
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  check_perms(n, h);
  if (!transitive_on_points(n, h)) throw Error(ErrorCode::NonTransitiveH, "H is not transitive on n points");

  const SignMask mask = static_cast<SignMask>((std::uint64_t{1} << n) - 1);

  struct Counts {
    std::uint64_t full = 0, simple = 0, full_not_simple = 0;
  };
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Counts& c) {
    std::vector<SignMask> draws(static_cast<size_t>(k));
    for (std::uint64_t t = lo; t < hi; ++t) {
      SplitMix64 rng(seed, t);
      for (auto& d : draws) d = opts.sampler ? opts.sampler(rng, n) & mask : static_cast<SignMask>(rng.next() & mask);
      bool full = f2_rank(draws) == n;
      bool simple = stable_span_is_full(n, draws, h);
      c.full += full;
      c.simple += simple;
      c.full_not_simple += full && !simple;
    }
  };

  unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(opts.threads), trials));
  std::vector<Counts> parts(threads);
  if (threads == 1) {
    run_range(0, trials, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) {
      std::uint64_t lo = trials * i / threads, hi = trials * (i + 1) / threads;
      pool.emplace_back(run_range, lo, hi, std::ref(parts[i]));
    }
    for (auto& th : pool) th.join();
  }

  DensityReport r;
  r.n = n;
  r.k = k;
  r.trials = trials;
  for (const auto& c : parts) {
    r.full_count += c.full;
    r.simple_count += c.simple;
    r.full_not_simple += c.full_not_simple;
  }
  Integer tr(std::to_string(trials));
  r.estimate = Rational(Integer(std::to_string(r.full_count)), tr);
  r.estimate.canonicalize();
  r.simple_fraction = Rational(Integer(std::to_string(r.simple_count)), tr);
  r.simple_fraction.canonicalize();
  r.exact = exact_generation_probability(n, k);
  r.abs_error = abs(r.estimate - r.exact);
  double p = r.exact.get_d();
  r.sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
  return r;
}

}  // namespace weilkit
