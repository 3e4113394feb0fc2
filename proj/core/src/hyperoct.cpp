#include "weilkit/hyperoct.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include "weilkit/error.hpp"

namespace weilkit {

namespace {

constexpr int kMaxGroupN = 8;

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<size_t>(b[i])];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[static_cast<size_t>(a[i])] = static_cast<int>(i);
  return r;
}

void check_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[static_cast<size_t>(x)])
      throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[static_cast<size_t>(x)] = true;
  }
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Sorted cycle lengths.
std::vector<int> cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long encode(const Perm& p) {
  long c = 0;
  for (int x : p) c = c * static_cast<long>(p.size()) + x;
  return c;
}

// Closure of a set of permutations; elements sorted. `seen` is an all-zero
// scratch buffer of size n^n and is returned all-zero.
std::vector<Perm> perm_closure(const std::vector<Perm>& gens, size_t n, std::vector<char>& seen) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> out{id};
  seen[static_cast<size_t>(encode(id))] = 1;
  for (size_t head = 0; head < out.size(); ++head)
    for (const auto& g : gens) {
      Perm y = compose(g, out[head]);
      auto& s = seen[static_cast<size_t>(encode(y))];
      if (!s) {
        s = 1;
        out.push_back(std::move(y));
      }
    }
  for (const auto& e : out) seen[static_cast<size_t>(encode(e))] = 0;
  std::sort(out.begin(), out.end());
  return out;
}

bool conjugate_groups(const std::vector<Perm>& a, const std::vector<Perm>& b, size_t n) {
  Perm c(n);
  std::iota(c.begin(), c.end(), 0);
  std::set<Perm> bs(b.begin(), b.end());
  do {
    Perm ci = perm_inverse(c);
    bool ok = true;
    for (const auto& x : a)
      if (!bs.count(compose(compose(c, x), ci))) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(c.begin(), c.end()));
  return false;
}

std::string shadow_name(int n, size_t order) {
  const auto o = static_cast<long>(order);
  if (o == factorial(n)) return "S" + std::to_string(n);
  if (o == n) return "C" + std::to_string(n);
  if (2 * o == factorial(n)) return "A" + std::to_string(n);
  if (o == 2L * n) return "D" + std::to_string(n);
  if (o == 168 && n == 7) return "PSL(3,2)";
  return "F" + std::to_string(o);
}

void check_shape_n(int n) {
  if (n != 3 && n != 5 && n != 7) throw Error(ErrorCode::UnsupportedN, "shapes are tabulated for n in {3, 5, 7}");
}

std::vector<Integer> to_integers(const Weight& w) {
  std::vector<Integer> out;
  out.reserve(w.size());
  for (long x : w) out.emplace_back(x);
  return out;
}

// Rational slope numerators over 2d: d + 2 k.w for each vertex w.
bool admissible_profile(const std::vector<long>& k, long d, SlopeProfile& out) {
  const int n = static_cast<int>(k.size());
  std::map<long, int> counts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    long s = d;
    for (int i = 0; i < n; ++i) s += ((mask >> i) & 1u) ? -2 * k[static_cast<size_t>(i)] : 2 * k[static_cast<size_t>(i)];
    if (s < 0 || s > 2 * d) return false;
    ++counts[s];
  }
  for (const auto& [s, m] : counts) {
    if ((s * m) % (2 * d) != 0) return false;  // integral break points
    auto it = counts.find(2 * d - s);
    if (it == counts.end() || it->second != m) return false;
  }
  out.clear();
  for (const auto& [s, m] : counts) out[make_rational(s, 2 * d)] = m;
  return true;
}

}  // namespace

SignedPerm SignedPerm::identity(int n) {
  SignedPerm g;
  g.signs.assign(static_cast<size_t>(n), 1);
  g.perm.resize(static_cast<size_t>(n));
  std::iota(g.perm.begin(), g.perm.end(), 0);
  return g;
}

SignedPerm SignedPerm::negation(int n) {
  SignedPerm g = identity(n);
  g.signs.assign(static_cast<size_t>(n), -1);
  return g;
}

SignedPerm SignedPerm::cycle(int n) {
  SignedPerm g = identity(n);
  for (int i = 0; i < n; ++i) g.perm[static_cast<size_t>(i)] = (i + 1) % n;
  return g;
}

SignedPerm SignedPerm::from_perm(std::vector<int> perm) {
  check_perm(perm);
  SignedPerm g = identity(static_cast<int>(perm.size()));
  g.perm = std::move(perm);
  return g;
}

SignedPerm SignedPerm::from_signs(std::vector<int> signs) {
  for (int s : signs)
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidArgument, "signs must be +-1");
  SignedPerm g = identity(static_cast<int>(signs.size()));
  g.signs = std::move(signs);
  return g;
}

Weight SignedPerm::act(const Weight& w) const {
  Weight r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[static_cast<size_t>(perm[i])] = w[i];
  for (size_t i = 0; i < r.size(); ++i) r[i] *= signs[i];
  return r;
}

std::vector<Integer> SignedPerm::act(const std::vector<Integer>& w) const {
  std::vector<Integer> r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[static_cast<size_t>(perm[i])] = w[i];
  for (size_t i = 0; i < r.size(); ++i)
    if (signs[i] < 0) r[i] = -r[i];
  return r;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm c;
  c.perm = compose(a.perm, b.perm);
  const Perm ainv = perm_inverse(a.perm);
  c.signs.resize(a.signs.size());
  for (size_t k = 0; k < c.signs.size(); ++k) c.signs[k] = a.signs[k] * b.signs[static_cast<size_t>(ainv[k])];
  return c;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.perm = perm_inverse(perm);
  r.signs.resize(signs.size());
  // r * this = id forces r.signs[i] = signs[perm[i]].
  for (size_t i = 0; i < signs.size(); ++i) r.signs[static_cast<size_t>(r.perm[i])] = signs[i];
  return r;
}

bool SignedPerm::is_pure_sign() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

namespace {

// Bits 0..7 hold the sign mask (bit i set when signs[i] = -1), then 3 bits per image perm[i].
std::uint64_t pack(const SignedPerm& g) {
  std::uint64_t c = 0;
  for (int i = g.n() - 1; i >= 0; --i) c = (c << 3) | static_cast<std::uint64_t>(g.perm[static_cast<size_t>(i)]);
  c <<= 8;
  for (int i = 0; i < g.n(); ++i)
    if (g.signs[static_cast<size_t>(i)] < 0) c |= std::uint64_t{1} << i;
  return c;
}

SignedPerm unpack(std::uint64_t c, int n) {
  SignedPerm g = SignedPerm::identity(n);
  for (int i = 0; i < n; ++i) g.signs[static_cast<size_t>(i)] = ((c >> i) & 1u) ? -1 : 1;
  c >>= 8;
  for (int i = 0; i < n; ++i, c >>= 3) g.perm[static_cast<size_t>(i)] = static_cast<int>(c & 7u);
  return g;
}

std::uint64_t packed_product(std::uint64_t a, std::uint64_t b, int n) {
  int ap[8], bp[8], ainv[8];
  for (int i = 0; i < n; ++i) {
    ap[i] = static_cast<int>((a >> (8 + 3 * i)) & 7u);
    bp[i] = static_cast<int>((b >> (8 + 3 * i)) & 7u);
  }
  for (int i = 0; i < n; ++i) ainv[ap[i]] = i;
  std::uint64_t c = 0;
  for (int i = n - 1; i >= 0; --i) c = (c << 3) | static_cast<std::uint64_t>(ap[bp[i]]);
  c <<= 8;
  for (int k = 0; k < n; ++k) c |= (((a >> k) ^ (b >> ainv[k])) & 1u) << k;
  return c;
}

}  // namespace

std::vector<SignedPerm> SignedPermGroup::elements() const {
  std::vector<SignedPerm> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(unpack(c, n));
  return out;
}

bool SignedPermGroup::contains(const SignedPerm& g) const {
  return g.n() == n && std::binary_search(codes.begin(), codes.end(), pack(g));
}

bool SignedPermGroup::contains_negation() const { return contains(SignedPerm::negation(n)); }

bool SignedPermGroup::shadow_transitive() const {
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (const auto& p : shadow) hit[static_cast<size_t>(p[0])] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

SignedPermGroup generate(const std::vector<SignedPerm>& gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "at least one generator is required");
  const int n = gens[0].n();
  if (n > kMaxGroupN) throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " exceeds 8");
  for (const auto& g : gens) {
    if (g.n() != n || static_cast<int>(g.signs.size()) != n) throw Error(ErrorCode::InvalidArgument, "generators act on different ranks");
    check_perm(g.perm);
  }
  SignedPermGroup G;
  G.n = n;
  G.generators = gens;
  std::vector<std::uint64_t> packed_gens;
  for (const auto& g : gens) packed_gens.push_back(pack(g));
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> order{pack(SignedPerm::identity(n))};
  seen.insert(order[0]);
  for (size_t head = 0; head < order.size(); ++head)
    for (auto g : packed_gens) {
      auto y = packed_product(g, order[head], n);
      if (seen.insert(y).second) order.push_back(y);
    }
  std::sort(order.begin(), order.end());
  G.codes = std::move(order);
  std::set<std::uint64_t> shadow_codes;
  size_t pure = 0;
  const std::uint64_t id_perm = pack(SignedPerm::identity(n)) >> 8;
  for (auto c : G.codes) {
    shadow_codes.insert(c >> 8);
    if ((c >> 8) == id_perm) ++pure;
  }
  for (auto c : shadow_codes) G.shadow.push_back(unpack(c << 8, n).perm);
  std::sort(G.shadow.begin(), G.shadow.end());
  while ((size_t{1} << G.sign_rank) < pure) ++G.sign_rank;
  G.split = std::all_of(shadow_codes.begin(), shadow_codes.end(),
                        [&](std::uint64_t c) { return std::binary_search(G.codes.begin(), G.codes.end(), c << 8); });
  return G;
}

SignedPermGroup conjugate(const SignedPermGroup& g, const SignedPerm& c) {
  std::vector<SignedPerm> gens;
  const SignedPerm ci = c.inverse();
  for (const auto& x : g.generators) gens.push_back(c * x * ci);
  return generate(gens);
}

std::vector<Integer> weight_image(const CyclicLattice& kernel, const Weight& w) {
  return reduce_by_hnf(to_integers(w), kernel.basis);
}

SymbolicFrobenius make_frobenius(const CyclicLattice& kernel, const SignedPermGroup& group) {
  if (kernel.n != group.n) throw Error(ErrorCode::InvalidArgument, "kernel and group act on different ranks");
  for (const auto& g : group.generators)
    for (int r = 0; r < kernel.basis.rows(); ++r)
      if (!in_row_lattice(g.act(kernel.basis.row(r)), kernel.basis))
        throw Error(ErrorCode::UnstableKernel, "the group does not preserve the kernel");
  SymbolicFrobenius sf;
  sf.n = kernel.n;
  sf.kernel = kernel;
  sf.group = group;
  return sf;
}

std::vector<std::vector<std::vector<Integer>>> orbits_on_weights(const SymbolicFrobenius& sf) {
  const int n = sf.n;
  std::set<std::vector<Integer>> assigned;
  std::vector<std::vector<std::vector<Integer>>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Weight w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = ((mask >> i) & 1u) ? -1 : 1;
    auto img = weight_image(sf.kernel, w);
    if (assigned.count(img)) continue;
    // Orbit by generator closure on canonical images.
    std::set<std::vector<Integer>> orbit{img};
    std::deque<std::vector<Integer>> todo{img};
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop_front();
      for (const auto& g : sf.group.generators) {
        auto y = reduce_by_hnf(g.act(x), sf.kernel.basis);
        if (orbit.insert(y).second) todo.push_back(std::move(y));
      }
    }
    assigned.insert(orbit.begin(), orbit.end());
    out.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ValuationAssignment> slope_assignment(const CyclicLattice& kernel, int n, int denominator_bound) {
  if (n < 2 || !is_prime(static_cast<std::uint64_t>(n))) throw Error(ErrorCode::NotPrime, std::to_string(n) + " is not prime");
  if (kernel.n != n) throw Error(ErrorCode::InvalidArgument, "kernel rank differs from n");
  if (n > 16) throw Error(ErrorCode::TooLarge, "hypercube too large");
  const long bound = denominator_bound > 0 ? denominator_bound : 2L * n;
  const int quotient_rank = n - kernel.rank;
  std::vector<ValuationAssignment> out;
  std::vector<std::vector<long>> kernel_rows;
  for (int r = 0; r < kernel.basis.rows(); ++r) {
    std::vector<long> row;
    for (int i = 0; i < n; ++i) row.push_back(kernel.basis(r, i).get_si());
    kernel_rows.push_back(std::move(row));
  }
  std::vector<long> k(static_cast<size_t>(n));
  long d = 1;
  auto visit = [&]() {
    long g = d;
    for (long x : k) g = std::gcd(g, std::labs(x));
    if (g != 1) return;  // already seen with a smaller denominator
    for (const auto& row : kernel_rows) {
      long dot = 0;
      for (int i = 0; i < n; ++i) dot += row[static_cast<size_t>(i)] * k[static_cast<size_t>(i)];
      if (dot != 0) return;
    }
    // Keep the lexicographically largest translate under negation and rotation.
    std::vector<long> t(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s)
      for (int sign : {1, -1}) {
        for (int i = 0; i < n; ++i) t[static_cast<size_t>((i + s) % n)] = sign * k[static_cast<size_t>(i)];
        if (t > k) return;
      }
    SlopeProfile prof;
    if (!admissible_profile(k, d, prof)) return;
    // Translates of phi under the n-cycle must separate the quotient.
    IntMatrix m(n, n);
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < n; ++i) m(s, (i + s) % n) = k[static_cast<size_t>(i)];
    if (rank(m) != quotient_rank) return;
    ValuationAssignment va;
    for (long x : k) va.coefficients.push_back(make_rational(x, d));
    va.profile = std::move(prof);
    out.push_back(std::move(va));
  };
  // Every k with 2 * sum |k_i| <= d.
  std::function<void(int, long)> rec = [&](int i, long budget) {
    if (i == n) {
      visit();
      return;
    }
    for (long x = -budget; x <= budget; ++x) {
      k[static_cast<size_t>(i)] = x;
      rec(i + 1, budget - std::labs(x));
    }
  };
  for (; d <= bound; ++d) rec(0, d / 2);
  if (out.empty()) throw Error(ErrorCode::NoAdmissibleAssignment, "no admissible valuation assignment");
  return out;
}

namespace {

std::vector<GaloisShape> compute_shadows(int n) {
  const auto un = static_cast<size_t>(n);
  Perm c(un);
  for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = (i + 1) % n;
  // A transitive group of prime degree contains an n-cycle, and with it is
  // generated by that cycle and one further element, so two-generator closures suffice.
  std::vector<std::vector<Perm>> reps;
  std::vector<Perm> second;
  std::set<std::vector<long>> seen_sets;
  std::vector<char> scratch(static_cast<size_t>(std::pow(n, n)), 0);
  std::vector<char> done(scratch.size(), 0);
  std::vector<Perm> powers{Perm(un)};
  std::iota(powers[0].begin(), powers[0].end(), 0);
  for (int i = 1; i < n; ++i) powers.push_back(compose(c, powers.back()));
  Perm g(un);
  std::iota(g.begin(), g.end(), 0);
  do {
    // <c, g> = <c, c^i g c^j>: one closure per double coset.
    if (done[static_cast<size_t>(encode(g))]) continue;
    for (const auto& a : powers)
      for (const auto& b : powers) done[static_cast<size_t>(encode(compose(compose(a, g), b)))] = 1;
    auto elems = perm_closure({c, g}, un, scratch);
    std::vector<long> codes;
    for (const auto& e : elems) codes.push_back(encode(e));
    std::sort(codes.begin(), codes.end());
    if (!seen_sets.insert(codes).second) continue;
    auto invariant = [](const std::vector<Perm>& es) {
      std::map<std::vector<int>, int> hist;
      for (const auto& e : es) ++hist[cycle_type(e)];
      return hist;
    };
    bool fresh = true;
    for (const auto& r : reps)
      if (r.size() == elems.size() && invariant(r) == invariant(elems) && conjugate_groups(r, elems, un)) {
        fresh = false;
        break;
      }
    if (fresh) {
      reps.push_back(elems);
      second.push_back(g);
    }
  } while (std::next_permutation(g.begin(), g.end()));
  std::vector<size_t> idx(reps.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return reps[a].size() < reps[b].size(); });
  std::vector<GaloisShape> out;
  for (size_t i : idx) {
    GaloisShape s;
    s.h_order = reps[i].size();
    s.h_name = shadow_name(n, s.h_order);
    s.h_generators = {c};
    if (s.h_order > un) s.h_generators.push_back(second[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<GaloisShape> transitive_shadows(int n) {
  check_shape_n(n);
  static std::mutex mu;
  static std::map<int, std::vector<GaloisShape>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_shadows(n)).first;
  return it->second;
}

std::vector<GaloisShape> galois_shapes(int n) {
  std::vector<GaloisShape> out;
  for (const auto& h : transitive_shadows(n))
    for (int j = 1; j <= n; ++j) {
      GaloisShape s = h;
      s.j = j;
      out.push_back(std::move(s));
    }
  return out;
}

SignedPermGroup shape_group(int n, const GaloisShape& shape) {
  if (shape.j < 1 || shape.j > n) throw Error(ErrorCode::InvalidArgument, "j out of range");
  const unsigned full = (1u << n) - 1;
  auto act = [&](const Perm& p, unsigned v) {
    unsigned r = 0;
    for (int i = 0; i < n; ++i)
      if ((v >> i) & 1u) r |= 1u << p[static_cast<size_t>(i)];
    return r;
  };
  // H-stable subspaces of F_2^n containing the all-ones vector, as sorted element lists.
  auto close = [&](std::set<unsigned> s) {
    std::deque<unsigned> todo(s.begin(), s.end());
    while (!todo.empty()) {
      unsigned x = todo.front();
      todo.pop_front();
      std::vector<unsigned> add;
      for (const auto& p : shape.h_generators) add.push_back(act(p, x));
      for (unsigned y : std::vector<unsigned>(s.begin(), s.end())) add.push_back(x ^ y);
      for (unsigned a : add)
        if (s.insert(a).second) todo.push_back(a);
    }
    return s;
  };
  std::set<std::set<unsigned>> found;
  std::deque<std::set<unsigned>> todo{close({0u, full})};
  found.insert(todo.front());
  while (!todo.empty()) {
    auto u = todo.front();
    todo.pop_front();
    for (unsigned v = 1; v <= full; ++v) {
      if (u.count(v)) continue;
      auto s = u;
      s.insert(v);
      s = close(s);
      if (found.insert(s).second) todo.push_back(s);
    }
  }
  const size_t want = size_t{1} << shape.j;
  for (const auto& u : found) {
    if (u.size() != want) continue;
    std::vector<SignedPerm> gens;
    for (const auto& p : shape.h_generators) gens.push_back(SignedPerm::from_perm(p));
    // A basis of u, by greedy elimination on leading bits.
    std::vector<unsigned> basis;
    for (unsigned v : u) {
      unsigned r = v;
      for (unsigned b : basis) r = std::min(r, r ^ b);
      if (r == 0) continue;
      basis.push_back(r);
      std::sort(basis.rbegin(), basis.rend());
    }
    for (unsigned v : basis) {
      std::vector<int> signs(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) signs[static_cast<size_t>(i)] = ((v >> i) & 1u) ? -1 : 1;
      gens.push_back(SignedPerm::from_signs(signs));
    }
    return generate(gens);
  }
  throw Error(ErrorCode::Inconsistent, "no " + shape.h_name + "-stable sign subgroup of rank " + std::to_string(shape.j) + " contains -1");
}

bool isokummerian_equiv(const SymbolicFrobenius& sf, const std::vector<std::vector<Integer>>& orbit1,
                        const std::vector<std::vector<Integer>>& orbit2) {
  auto generated = [&](const std::vector<std::vector<Integer>>& orbit) {
    IntMatrix m(0, sf.n);
    for (int r = 0; r < sf.kernel.basis.rows(); ++r) m.append_row(sf.kernel.basis.row(r));
    for (const auto& v : orbit) m.append_row(v);
    m.append_row(std::vector<Integer>(static_cast<size_t>(sf.n), Integer(1)));
    return hermite_normal_form(m);
  };
  return generated(orbit1) == generated(orbit2);
}

}  // namespace weilkit
