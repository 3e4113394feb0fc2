#include <algorithm>
#include <functional>
#include <numeric>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "weilkit/error.hpp"
#include "weilkit/hyperoct.hpp"

using namespace weilkit;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

CyclicLattice kernel_of(int n, KernelTag tag) {
  for (const auto& lat : saturated_cyclic_sublattices(n))
    if (kernel_case(lat).tag == tag) return lat;
  FAIL("missing kernel");
  return {};
}

SignedPermGroup all_flips_with_cycle(int n) {
  std::vector<SignedPerm> gens{SignedPerm::cycle(n)};
  for (int i = 0; i < n; ++i) {
    std::vector<int> s(static_cast<size_t>(n), 1);
    s[static_cast<size_t>(i)] = -1;
    gens.push_back(SignedPerm::from_signs(s));
  }
  return generate(gens);
}

std::multiset<size_t> sizes(const std::vector<std::vector<std::vector<Integer>>>& orbits) {
  std::multiset<size_t> s;
  for (const auto& o : orbits) s.insert(o.size());
  return s;
}

// Orbits by applying every group element to every vertex.
std::set<std::set<std::vector<Integer>>> orbits_by_elements(const CyclicLattice& k, const SignedPermGroup& g) {
  std::set<std::set<std::vector<Integer>>> out;
  const int n = k.n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Weight w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = ((mask >> i) & 1u) ? -1 : 1;
    std::set<std::vector<Integer>> orbit;
    for (const auto& e : g.elements()) orbit.insert(weight_image(k, e.act(w)));
    out.insert(orbit);
  }
  return out;
}

SignedPerm random_signed_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  SignedPerm g = SignedPerm::from_perm(p);
  for (auto& s : g.signs) s = (rng() & 1) ? -1 : 1;
  return g;
}

}  // namespace

TEST_CASE("signed permutation composition matches the action") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    auto a = random_signed_perm(rng, n), b = random_signed_perm(rng, n);
    Weight w(static_cast<size_t>(n));
    for (auto& x : w) x = static_cast<long>(rng() % 11) - 5;
    CHECK((a * b).act(w) == a.act(b.act(w)));
    CHECK((a * a.inverse()) == SignedPerm::identity(n));
    CHECK((a.inverse() * a) == SignedPerm::identity(n));
  }
}

TEST_CASE("group generation") {
  CHECK(generate({SignedPerm::cycle(5)}).order() == 5);
  CHECK(generate({SignedPerm::negation(5)}).order() == 2);
  auto big = all_flips_with_cycle(5);
  CHECK(big.order() == 160);
  CHECK(big.sign_rank == 5);
  CHECK(big.split);
  CHECK(big.contains_negation());
  CHECK(big.shadow.size() == 5);
  CHECK(big.order() == (size_t{1} << big.sign_rank) * big.shadow.size());
  auto nc = generate({SignedPerm::negation(5), SignedPerm::cycle(5)});
  CHECK(nc.order() == 10);
  CHECK(nc.sign_rank == 1);
  CHECK(nc.shadow_transitive());
  CHECK_FALSE(generate({SignedPerm::negation(5)}).shadow_transitive());
  // A twisted cycle: the sign part is only {+-1}.
  SignedPerm twisted = SignedPerm::cycle(3);
  twisted.signs = {-1, 1, 1};
  auto tw = generate({twisted});
  CHECK(tw.order() == 6);
  CHECK_FALSE(tw.split);
  CHECK(code_of([] { generate({SignedPerm::identity(9)}); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { generate({SignedPerm::identity(3), SignedPerm::identity(4)}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("orbits on hypercube weights") {
  auto zero = make_frobenius(kernel_of(5, KernelTag::Zero), all_flips_with_cycle(5));
  CHECK(sizes(orbits_on_weights(zero)) == std::multiset<size_t>{32});

  auto nc = generate({SignedPerm::negation(5), SignedPerm::cycle(5)});
  auto full = make_frobenius(kernel_of(5, KernelTag::Full), nc);
  auto fo = orbits_on_weights(full);
  REQUIRE(fo.size() == 1);
  CHECK(fo[0] == std::vector<std::vector<Integer>>{std::vector<Integer>(5, Integer(0))});

  auto diag = make_frobenius(kernel_of(5, KernelTag::Diagonal), nc);
  auto dor = orbits_on_weights(diag);
  CHECK(sizes(dor) == std::multiset<size_t>{1, 10, 10, 10});

  CHECK(code_of([&] { make_frobenius(kernel_of(5, KernelTag::Diagonal), all_flips_with_cycle(5)); }) ==
        ErrorCode::UnstableKernel);
}

TEST_CASE("orbits agree with full element action and are conjugation invariant") {
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 4, 5}) {
    for (const auto& lat : saturated_cyclic_sublattices(n)) {
      std::vector<SignedPermGroup> groups{generate({SignedPerm::negation(n), SignedPerm::cycle(n)}),
                                          generate({SignedPerm::cycle(n)})};
      for (const auto& g : groups) {
        auto sf = make_frobenius(lat, g);
        auto orbits = orbits_on_weights(sf);
        std::set<std::set<std::vector<Integer>>> got;
        size_t total = 0;
        for (const auto& o : orbits) {
          got.insert({o.begin(), o.end()});
          total += o.size();
        }
        CHECK(got == orbits_by_elements(lat, g));
        std::set<std::vector<Integer>> images;
        for (const auto& o : orbits) images.insert(o.begin(), o.end());
        CHECK(total == images.size());
      }
    }
    // Zero kernel is stable under every conjugation.
    auto zero = kernel_of(n, n == 4 ? KernelTag::General : KernelTag::Zero);
    if (zero.rank != 0) continue;
    auto g = generate({SignedPerm::negation(n), SignedPerm::cycle(n)});
    auto base = sizes(orbits_on_weights(make_frobenius(zero, g)));
    for (int t = 0; t < 10; ++t)
      CHECK(sizes(orbits_on_weights(make_frobenius(zero, conjugate(g, random_signed_perm(rng, n))))) == base);
  }
}

TEST_CASE("full sign rank on the zero kernel is transitive") {
  for (int n : {3, 5, 7}) {
    for (const auto& h : transitive_shadows(n)) {
      GaloisShape s = h;
      s.j = n;
      auto g = shape_group(n, s);
      CHECK(g.sign_rank == n);
      auto orbits = orbits_on_weights(make_frobenius(kernel_of(n, KernelTag::Zero), g));
      REQUIRE(orbits.size() == 1);
      CHECK(orbits[0].size() == (size_t{1} << n));
    }
  }
}

TEST_CASE("slope assignment examples") {
  auto sz = slope_assignment(kernel_of(5, KernelTag::SumZero), 5);
  REQUIRE(sz.size() == 1);
  CHECK(sz[0].coefficients == std::vector<Rational>(5, make_rational(1, 10)));
  SlopeProfile case2{{Rational(0), 1},           {make_rational(1, 5), 5}, {make_rational(2, 5), 10},
                     {make_rational(3, 5), 10}, {make_rational(4, 5), 5}, {Rational(1), 1}};
  CHECK(sz[0].profile == case2);
  CHECK(sz[0].profile.count(make_rational(1, 2)) == 0);

  auto fl = slope_assignment(kernel_of(5, KernelTag::Full), 5);
  REQUIRE(fl.size() == 1);
  CHECK(fl[0].profile == SlopeProfile{{make_rational(1, 2), 32}});

  auto s3 = slope_assignment(kernel_of(3, KernelTag::SumZero), 3);
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].profile ==
        SlopeProfile{{Rational(0), 1}, {make_rational(1, 3), 3}, {make_rational(2, 3), 3}, {Rational(1), 1}});

  CHECK(code_of([] { slope_assignment(saturated_cyclic_sublattices(4)[0], 4); }) == ErrorCode::NotPrime);
  // Bound 1 leaves only phi = 0, which is degenerate for a nonzero quotient.
  CHECK(code_of([] { slope_assignment(kernel_of(5, KernelTag::SumZero), 5, 1); }) == ErrorCode::NoAdmissibleAssignment);
}

TEST_CASE("slope assignment outputs satisfy the profile invariants") {
  for (int n : {3, 5}) {
    std::set<int> halves;
    for (auto tag : {KernelTag::Zero, KernelTag::Diagonal, KernelTag::SumZero, KernelTag::Full}) {
      auto kernel = kernel_of(n, tag);
      for (const auto& va : slope_assignment(kernel, n)) {
        // Recompute the profile from the coefficients.
        SlopeProfile prof;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          Rational s = make_rational(1, 2);
          for (int i = 0; i < n; ++i) s += ((mask >> i) & 1u) ? -va.coefficients[static_cast<size_t>(i)] : va.coefficients[static_cast<size_t>(i)];
          ++prof[s];
        }
        CHECK(prof == va.profile);
        int total = 0;
        Rational weighted = 0;
        for (const auto& [s, m] : prof) {
          CHECK(s >= 0);
          CHECK(s <= 1);
          CHECK(prof.count(1 - s) == 1);
          CHECK(prof.at(1 - s) == m);
          CHECK(Rational(s * m).get_den() == 1);
          total += m;
          weighted += s * m;
        }
        CHECK(total == (1 << n));
        CHECK(weighted == Rational(1 << (n - 1)));
        // phi vanishes on the kernel.
        for (int r = 0; r < kernel.basis.rows(); ++r) {
          Rational dot = 0;
          for (int i = 0; i < n; ++i) dot += va.coefficients[static_cast<size_t>(i)] * kernel.basis(r, i);
          CHECK(dot == 0);
        }
        halves.insert(prof.count(make_rational(1, 2)) ? prof.at(make_rational(1, 2)) : 0);
      }
    }
    if (n == 5)
      for (int h : halves) CHECK((h == 0 || h == 8 || h == 12 || h == 16 || h == 32));
  }
}

TEST_CASE("galois shapes") {
  auto h5 = transitive_shadows(5);
  std::vector<std::string> names;
  std::vector<size_t> orders;
  for (const auto& s : h5) {
    names.push_back(s.h_name);
    orders.push_back(s.h_order);
  }
  CHECK(names == std::vector<std::string>{"C5", "D5", "F20", "A5", "S5"});
  CHECK(orders == std::vector<size_t>{5, 10, 20, 60, 120});
  auto h3 = transitive_shadows(3);
  REQUIRE(h3.size() == 2);
  CHECK(h3[0].h_name == "C3");
  CHECK(h3[1].h_name == "S3");
  CHECK(transitive_shadows(7).size() == 7);
  auto shapes = galois_shapes(5);
  CHECK(shapes.size() == 25);
  std::set<int> js;
  for (const auto& s : shapes) js.insert(s.j);
  CHECK(js == std::set<int>{1, 2, 3, 4, 5});
  CHECK(code_of([] { galois_shapes(11); }) == ErrorCode::UnsupportedN);
  CHECK(code_of([] { galois_shapes(4); }) == ErrorCode::UnsupportedN);

  // Each shadow is transitive, contains the n-cycle, and its generators close to the stated order.
  for (int n : {3, 5, 7})
    for (const auto& s : transitive_shadows(n)) {
      std::vector<SignedPerm> gens;
      for (const auto& p : s.h_generators) gens.push_back(SignedPerm::from_perm(p));
      auto g = generate(gens);
      CHECK(g.order() == s.h_order);
      CHECK(g.shadow_transitive());
      CHECK(g.contains(SignedPerm::cycle(n)));
    }
}

TEST_CASE("shape groups") {
  auto c5 = transitive_shadows(5)[0];
  c5.j = 5;
  CHECK(shape_group(5, c5).order() == 160);
  c5.j = 1;
  auto g1 = shape_group(5, c5);
  CHECK(g1.order() == 10);
  CHECK(g1.contains_negation());
  c5.j = 2;
  CHECK(code_of([&] { shape_group(5, c5); }) == ErrorCode::Inconsistent);
  // F21 at n = 7 keeps the two rank-3 summands apart; D7 swaps them.
  for (const auto& s : transitive_shadows(7)) {
    GaloisShape t = s;
    t.j = 4;
    if (s.h_name == "C7" || s.h_name == "F21") CHECK(shape_group(7, t).sign_rank == 4);
    if (s.h_name == "D7") CHECK(code_of([&] { shape_group(7, t); }) == ErrorCode::Inconsistent);
  }
}

TEST_CASE("isokummerian equivalence") {
  auto nc = generate({SignedPerm::negation(5), SignedPerm::cycle(5)});
  auto sf = make_frobenius(kernel_of(5, KernelTag::Zero), nc);
  auto orbits = orbits_on_weights(sf);
  std::vector<std::vector<std::vector<Integer>>> two_flip;
  std::vector<std::vector<Integer>> diag;
  for (const auto& o : orbits) {
    bool has_two = false;
    for (const auto& v : o)
      if (std::count(v.begin(), v.end(), Integer(-1)) == 2) has_two = true;
    if (has_two) two_flip.push_back(o);
    if (std::find(o.begin(), o.end(), std::vector<Integer>(5, Integer(1))) != o.end()) diag = o;
  }
  REQUIRE(two_flip.size() == 2);
  CHECK(two_flip[0].size() == 10);
  CHECK(two_flip[1].size() == 10);
  CHECK(isokummerian_equiv(sf, two_flip[0], two_flip[1]));
  for (const auto& o : orbits) CHECK(isokummerian_equiv(sf, o, o));
  CHECK_FALSE(isokummerian_equiv(sf, diag, two_flip[0]));
}
