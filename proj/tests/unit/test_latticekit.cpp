#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "weilkit/error.hpp"
#include "weilkit/lattice.hpp"

using namespace weilkit;

namespace {

std::vector<Integer> vec(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

int tau(int n) {
  int t = 0;
  for (int d = 1; d <= n; ++d) t += n % d == 0;
  return t;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("lattice count is 2^tau(n) up to 24") {
  for (int n = 1; n <= 24; ++n) {
    auto lats = saturated_cyclic_sublattices(n);
    CHECK(lats.size() == (size_t{1} << tau(n)));
    CHECK(std::is_sorted(lats.begin(), lats.end(),
                         [](const CyclicLattice& a, const CyclicLattice& b) { return a.divisor_set < b.divisor_set; }));
  }
  CHECK(saturated_cyclic_sublattices(1).size() == 2);
  CHECK(saturated_cyclic_sublattices(6).size() == 16);
  CHECK(code_of([] { saturated_cyclic_sublattices(25); }) == ErrorCode::RankTooLarge);
  CHECK(code_of([] { saturated_cyclic_sublattices(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("rank five lattices are the four listed ones") {
  auto lats = saturated_cyclic_sublattices(5);
  REQUIRE(lats.size() == 4);
  // Order: {}, {1}, {1,5}, {5}.
  CHECK(lats[0].rank == 0);
  CHECK(lats[1].basis.to_rows() == std::vector<std::vector<Integer>>{vec({1, 1, 1, 1, 1})});
  CHECK(lats[2].basis == IntMatrix::identity(5));
  CHECK(lats[3].rank == 4);
  for (int i = 0; i < 5; ++i) {
    auto e = vec({0, 0, 0, 0, 0});
    e[static_cast<size_t>(i)] = 1;
    e[static_cast<size_t>((i + 1) % 5)] = -1;
    CHECK(in_row_lattice(e, lats[3].basis));
  }
  CHECK_FALSE(in_row_lattice(vec({1, 0, 0, 0, 0}), lats[3].basis));
}

TEST_CASE("lattices agree with the brute-force enumeration") {
  for (int n = 1; n <= 8; ++n) {
    auto brute = brute_force_lattices(n);
    auto lats = saturated_cyclic_sublattices(n);
    CHECK(brute.size() == lats.size());
    CHECK(brute_force_count(n) == (1 << tau(n)));
    for (const auto& lat : lats) CHECK(std::find(brute.begin(), brute.end(), lat.basis) != brute.end());
  }
  CHECK(brute_force_count(5) == 4);
  CHECK(brute_force_count(4) == 8);
  CHECK(brute_force_count(2) == 4);
  CHECK(code_of([] { brute_force_count(9); }) == ErrorCode::RankTooLarge);
}

TEST_CASE("lattice invariants") {
  for (int n = 1; n <= 16; ++n) {
    auto lats = saturated_cyclic_sublattices(n);
    auto divs = divisors(n);
    for (const auto& lat : lats) {
      CHECK(is_shift_stable(lat));
      CHECK(is_saturated(lat));
      long r = 0;
      for (long d : lat.divisor_set) r += euler_phi(d);
      CHECK(lat.rank == r);
      std::vector<long> comp;
      std::set_difference(divs.begin(), divs.end(), lat.divisor_set.begin(), lat.divisor_set.end(), std::back_inserter(comp));
      CHECK(cyclic_lattice(n, comp).rank + lat.rank == n);
    }
  }
}

TEST_CASE("kernel cases and recognition") {
  CHECK(kernel_case(identify_lattice(5, {vec({1, 1, 1, 1, 1})})).tag == KernelTag::Diagonal);
  CHECK(kernel_case(identify_lattice(5, {})).tag == KernelTag::Zero);
  CHECK(kernel_case(identify_lattice(5, IntMatrix::identity(5).to_rows())).tag == KernelTag::Full);
  CHECK(kernel_case(identify_lattice(5, {vec({1, -1, 0, 0, 0}), vec({0, 1, -1, 0, 0}), vec({0, 0, 1, -1, 0}),
                                         vec({0, 0, 0, 1, -1})}))
            .tag == KernelTag::SumZero);
  // Rank determines the tag for prime n.
  for (int n : {2, 3, 5, 7, 11}) {
    for (const auto& lat : saturated_cyclic_sublattices(n)) {
      auto tag = kernel_case(lat).tag;
      if (lat.rank == 0) CHECK(tag == KernelTag::Zero);
      else if (lat.rank == n) CHECK(tag == KernelTag::Full);
      else if (lat.divisor_set == std::vector<long>{1}) CHECK(tag == KernelTag::Diagonal);
      else CHECK(tag == KernelTag::SumZero);
    }
  }
  auto six = kernel_case(cyclic_lattice(6, {1, 3}));
  CHECK(six.tag == KernelTag::General);
  CHECK(six.divisor_set == std::vector<long>{1, 3});

  CHECK(code_of([] { identify_lattice(5, {vec({2, 2, 2, 2, 2})}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { identify_lattice(5, {vec({1, 0, 0, 0, 0})}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { cyclic_lattice(6, {4}); }) == ErrorCode::InvalidArgument);
}
