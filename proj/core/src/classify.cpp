#include "weilkit/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "weilkit/error.hpp"

namespace weilkit {

namespace {

using Image = std::vector<Integer>;
using Orbit = std::vector<Image>;

std::string rstr(const Rational& r) { return r.get_den() == 1 ? r.get_num().get_str() : r.get_str(); }

std::string profile_str(const SlopeProfile& prof) {
  std::string s;
  for (auto it = prof.rbegin(); it != prof.rend(); ++it) {
    if (!s.empty()) s += ", ";
    s += std::to_string(it->second) + " x " + rstr(it->first);
  }
  return s;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_prime_rank(int n) {
  if (n != 3 && n != 5 && n != 7) throw Error(ErrorCode::UnsupportedN, "n must be 3, 5 or 7, got " + std::to_string(n));
}

Weight flips(int n, std::initializer_list<int> at) {
  Weight w(static_cast<size_t>(n), 1);
  for (int i : at) w[static_cast<size_t>(i)] = -1;
  return w;
}

Weight first_flips(int n, int j) {
  Weight w(static_cast<size_t>(n), 1);
  for (int i = 0; i < j; ++i) w[static_cast<size_t>(i)] = -1;
  return w;
}

SlopeProfile ordinary_slopes(int dim) { return {{Rational(0), dim}, {Rational(1), dim}}; }

DecompositionComponent ss_elliptic(int n, int mult) {
  DecompositionComponent c;
  c.dimension = 1;
  c.multiplicity = mult;
  c.flavor = Flavor::Supersingular;
  c.endo = {AlgebraKind::Quaternion, 1, 2};
  c.representative = Weight(static_cast<size_t>(n), 1);
  c.slopes = {{make_rational(1, 2), 2}};
  return c;
}

DecompositionComponent cm_component(const Weight& rep, int dim, std::optional<Flavor> flavor) {
  DecompositionComponent c;
  c.dimension = dim;
  c.multiplicity = 1;
  c.flavor = flavor;
  c.endo = {AlgebraKind::CMField, 2 * dim, 1};
  c.representative = rep;
  if (flavor == Flavor::Ordinary) c.slopes = ordinary_slopes(dim);
  return c;
}

SignedPermGroup sign_cycle_group(int n) { return generate({SignedPerm::negation(n), SignedPerm::cycle(n)}); }

GaloisShape require_shape(const ShapeArg& shape, KernelTag kernel) {
  if (!shape) throw Error(ErrorCode::InvalidArgument, "the " + to_string(kernel) + " kernel needs a Galois shape (j, H)");
  return *shape;
}

bool is_cyclic(int n, const GaloisShape& s) { return s.h_order == static_cast<size_t>(n); }

// Index of the orbit containing the image of w.
size_t orbit_of(const SymbolicFrobenius& sf, const std::vector<Orbit>& orbits, const Weight& w) {
  auto img = weight_image(sf.kernel, w);
  for (size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].begin(), orbits[i].end(), img)) return i;
  throw Error(ErrorCode::InternalInconsistency, "vertex image outside every orbit");
}

// Class ids via isokummerian equivalence of the orbits carrying each representative.
void assign_isokummerian_ids(const SymbolicFrobenius& sf, std::vector<DecompositionComponent>& comps) {
  auto orbits = orbits_on_weights(sf);
  std::vector<size_t> idx;
  for (const auto& c : comps) idx.push_back(orbit_of(sf, orbits, c.representative));
  int next = 0;
  for (size_t i = 0; i < comps.size(); ++i) {
    comps[i].isokummerian_class_id = -1;
    for (size_t k = 0; k < i && comps[i].isokummerian_class_id < 0; ++k)
      if (isokummerian_equiv(sf, orbits[idx[i]], orbits[idx[k]])) comps[i].isokummerian_class_id = comps[k].isokummerian_class_id;
    if (comps[i].isokummerian_class_id < 0) comps[i].isokummerian_class_id = next++;
  }
}

void check_dimension(const DecompositionType& d) {
  long total = 0;
  int elliptic = 0;
  for (const auto& c : d.components) {
    total += static_cast<long>(c.dimension) * c.multiplicity;
    elliptic += c.dimension == 1;
  }
  if (total != (1L << (d.n - 1)))
    throw Error(ErrorCode::InternalInconsistency, "decomposition dimensions sum to " + std::to_string(total));
  if (elliptic > 1) throw Error(ErrorCode::InternalInconsistency, "more than one one-dimensional component");
}

// Admissible slope profiles on the kernel, cached per (n, tag).
const std::vector<SlopeProfile>& admissible_profiles(int n, KernelTag tag) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<SlopeProfile>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, static_cast<int>(tag));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<SlopeProfile> out;
  try {
    for (const auto& va : slope_assignment(kernel_lattice(n, tag), n)) out.push_back(va.profile);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoAdmissibleAssignment) throw;
  }
  return cache.emplace(key, std::move(out)).first->second;
}

void require_admissible(int n, KernelTag tag, const SlopeProfile& prof, const std::string& why) {
  const auto& ok = admissible_profiles(n, tag);
  if (std::find(ok.begin(), ok.end(), prof) == ok.end())
    throw Error(ErrorCode::Inconsistent, why + "; the Newton polygon " + profile_str(prof) +
                                             " is not realized by any admissible valuation assignment");
}

DecompositionType full_case(int n) {
  DecompositionType d;
  d.n = n;
  d.components.push_back(ss_elliptic(n, 1 << (n - 1)));
  auto sf = make_frobenius(kernel_lattice(n, KernelTag::Full), sign_cycle_group(n));
  assign_isokummerian_ids(sf, d.components);
  d.notes.push_back("every eigenvalue equals sqrt(q), all slopes are 1/2");
  return d;
}

DecompositionType sumzero_case(int n) {
  DecompositionType d;
  d.n = n;
  DecompositionComponent e = cm_component(Weight(static_cast<size_t>(n), 1), 1, Flavor::Ordinary);
  d.components.push_back(e);
  SlopeProfile total = e.slopes;
  for (int j = 1; j <= (n - 1) / 2; ++j) {
    DecompositionComponent c;
    c.dimension = n;
    c.multiplicity = static_cast<int>(binomial(n, j) / n);
    c.flavor = Flavor::Mixed;
    c.endo = {AlgebraKind::DivisionAlgebra, 2, n};
    c.representative = first_flips(n, j);
    c.slopes = {{make_rational(j, n), n}, {make_rational(n - j, n), n}};
    if (!division_index_compatible(c.dimension, c.endo.center_degree, c.slopes))
      throw Error(ErrorCode::InternalInconsistency, "division algebra index incompatible with the slopes");
    for (const auto& [s, m] : c.slopes) total[s] += m * c.multiplicity;
    d.components.push_back(c);
  }
  // The factor slopes must reproduce the unique admissible polygon of this kernel.
  const auto& ok = admissible_profiles(n, KernelTag::SumZero);
  if (ok.size() != 1 || ok[0] != total)
    throw Error(ErrorCode::InternalInconsistency, "sum-zero slopes disagree with the admissible polygon");
  auto sf = make_frobenius(kernel_lattice(n, KernelTag::SumZero), sign_cycle_group(n));
  assign_isokummerian_ids(sf, d.components);
  d.notes.push_back("Newton polygon " + profile_str(total));
  d.notes.push_back("each division algebra has index " + std::to_string(n) + " over an imaginary quadratic field in which p splits");
  d.notes.push_back("a factor of dimension 2n would need index 2n, but the index divides the slope denominator " + std::to_string(n));
  return d;
}

// Components read off the Galois orbits on the hypercube images, in vertex order.
std::vector<DecompositionComponent> orbit_components(const SymbolicFrobenius& sf, bool all_ordinary) {
  int n = sf.n;
  auto orbits = orbits_on_weights(sf);
  auto verts = hypercube_vertices(n);
  std::map<Image, int> per_image;
  for (const auto& v : verts) ++per_image[weight_image(sf.kernel, v)];
  std::vector<bool> used(orbits.size());
  std::vector<DecompositionComponent> out;
  for (const auto& v : verts) {
    size_t i = orbit_of(sf, orbits, v);
    if (used[i]) continue;
    used[i] = true;
    auto img = weight_image(sf.kernel, v);
    bool zero = std::all_of(img.begin(), img.end(), [](const Integer& x) { return x == 0; });
    if (zero) {
      auto c = ss_elliptic(n, per_image[img] / 2);
      c.representative = v;
      out.push_back(c);
      continue;
    }
    int dim = static_cast<int>(orbits[i].size() / 2);
    auto c = cm_component(v, dim, all_ordinary ? std::optional<Flavor>(Flavor::Ordinary) : std::nullopt);
    c.multiplicity = per_image[img];
    out.push_back(c);
  }
  return out;
}

SlopeProfile eigen_slopes(const std::vector<DecompositionComponent>& comps) {
  SlopeProfile total;
  for (const auto& c : comps)
    for (const auto& [s, m] : c.slopes) total[s] += m * c.multiplicity;
  return total;
}

SymbolicFrobenius diagonal_model(int n, const GaloisShape& s) {
  if (s.j != 1)
    throw Error(ErrorCode::Inconsistent, "the diagonal kernel is stable only under the signs +-1, so j must be 1 (got j = " +
                                             std::to_string(s.j) + ")");
  auto sf = make_frobenius(kernel_lattice(n, KernelTag::Diagonal), shape_group(n, s));
  if (is_cyclic(n, s)) {
    // Cyclic H makes the Galois group abelian, so every factor off sqrt(q) is ordinary.
    auto prof = eigen_slopes(orbit_components(sf, true));
    require_admissible(n, KernelTag::Diagonal, prof,
                       "H = " + s.h_name + " is cyclic, so the Galois group is abelian and every factor other than "
                       "the supersingular elliptic curve is ordinary");
  }
  return sf;
}

SymbolicFrobenius zero_model(int n, const GaloisShape& s) {
  auto ok = accepted_sign_ranks(n);
  if (std::find(ok.begin(), ok.end(), s.j) == ok.end()) {
    std::string set;
    for (int j : ok) set += (set.empty() ? "" : ", ") + std::to_string(j);
    throw Error(ErrorCode::Inconsistent, "[Q(pi_0):Q] = 2^j requires 2^(j-1) = 1 mod " + std::to_string(n) +
                                             ", so j lies in {" + set + "} (got j = " + std::to_string(s.j) + ")");
  }
  return make_frobenius(kernel_lattice(n, KernelTag::Zero), shape_group(n, s));
}

}  // namespace

KernelTag parse_kernel_tag(const std::string& s) {
  if (s == "zero") return KernelTag::Zero;
  if (s == "diagonal") return KernelTag::Diagonal;
  if (s == "sumzero") return KernelTag::SumZero;
  if (s == "full") return KernelTag::Full;
  throw Error(ErrorCode::InvalidArgument, "unknown kernel '" + s + "'");
}

CyclicLattice kernel_lattice(int n, KernelTag tag) {
  switch (tag) {
    case KernelTag::Zero: return cyclic_lattice(n, {});
    case KernelTag::Diagonal: return cyclic_lattice(n, {1});
    case KernelTag::SumZero: return cyclic_lattice(n, {n});
    case KernelTag::Full: return cyclic_lattice(n, {1, n});
    default: throw Error(ErrorCode::InvalidArgument, "kernel must be zero, diagonal, sumzero or full");
  }
}

std::vector<Weight> hypercube_vertices(int n) {
  std::vector<Weight> out;
  for (int j = 0; j <= n; ++j) {
    std::vector<bool> mask(static_cast<size_t>(n), false);
    std::fill(mask.begin(), mask.begin() + j, true);
    do {
      Weight w(static_cast<size_t>(n), 1);
      for (int i = 0; i < n; ++i)
        if (mask[static_cast<size_t>(i)]) w[static_cast<size_t>(i)] = -1;
      out.push_back(w);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return out;
}

std::vector<int> accepted_sign_ranks(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  std::vector<int> out;
  long pw = 1;  // 2^(j-1) mod n
  for (int j = 1; j <= n; ++j) {
    if (pw % n == 1 % n) out.push_back(j);
    pw = pw * 2 % n;
  }
  return out;
}

std::vector<int> admissible_half_multiplicities(int n, KernelTag kernel) {
  require_prime_rank(n);
  std::set<int> out;
  for (const auto& prof : admissible_profiles(n, kernel)) {
    auto it = prof.find(make_rational(1, 2));
    out.insert(it == prof.end() ? 0 : it->second);
  }
  return {out.begin(), out.end()};
}

bool division_index_compatible(int dimension, int center_degree, const SlopeProfile& slopes) {
  if (dimension < 1 || center_degree < 1) throw Error(ErrorCode::InvalidArgument, "dimension and center degree must be positive");
  if ((2 * dimension) % center_degree != 0) return false;
  long index = 2L * dimension / center_degree;
  long l = 1;
  for (const auto& entry : slopes) l = std::lcm(l, entry.first.get_den().get_si());
  return l % index == 0;
}

std::string algebra_label(const std::vector<DecompositionComponent>& comps) {
  std::map<std::pair<int, int>, int> division_count;
  for (const auto& c : comps)
    if (c.endo.kind == AlgebraKind::DivisionAlgebra) ++division_count[{c.endo.center_degree, c.endo.index}];
  std::map<std::pair<int, int>, int> seen;
  std::string out;
  for (const auto& c : comps) {
    std::string a;
    switch (c.endo.kind) {
      case AlgebraKind::Quaternion: a = "Q_{p,inf}"; break;
      case AlgebraKind::CMField: a = "F_" + std::to_string(c.endo.center_degree); break;
      case AlgebraKind::DivisionAlgebra: {
        std::pair<int, int> key{c.endo.center_degree, c.endo.index};
        std::string sub = division_count[key] > 1 ? "_" + std::to_string(++seen[key]) : "";
        a = "D" + sub + "^{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}";
        break;
      }
    }
    if (c.multiplicity > 1) a = "Mat_" + std::to_string(c.multiplicity) + "(" + a + ")";
    out += (out.empty() ? "" : " x ") + a;
  }
  return out;
}

DecompositionType classify_by_orbits(int n, KernelTag kernel, const ShapeArg& shape) {
  require_prime_rank(n);
  DecompositionType d;
  switch (kernel) {
    case KernelTag::Full: d = full_case(n); break;
    case KernelTag::SumZero: d = sumzero_case(n); break;
    case KernelTag::Diagonal: {
      auto s = require_shape(shape, kernel);
      auto sf = diagonal_model(n, s);
      d.n = n;
      d.components = orbit_components(sf, false);
      assign_isokummerian_ids(sf, d.components);
      d.notes.push_back("H = " + s.h_name + " determines the orbits off sqrt(q)");
      break;
    }
    case KernelTag::Zero: {
      auto s = require_shape(shape, kernel);
      auto sf = zero_model(n, s);
      bool abelian = s.j == 1 && is_cyclic(n, s);
      d.n = n;
      d.components = orbit_components(sf, abelian);
      if (s.j == 1) {
        // pi_0 has degree 2 and is not sqrt(q): an ordinary elliptic curve.
        d.components[0].flavor = Flavor::Ordinary;
        d.components[0].slopes = ordinary_slopes(1);
      }
      assign_isokummerian_ids(sf, d.components);
      if (d.components.size() == 1) d.notes.push_back("simple: [Q(pi_0):Q] = 2^" + std::to_string(n));
      if (abelian) d.notes.push_back("p splits completely in the abelian splitting field, so every factor is ordinary");
      break;
    }
    default: throw Error(ErrorCode::InvalidArgument, "kernel must be zero, diagonal, sumzero or full");
  }
  d.algebra = algebra_label(d.components);
  check_dimension(d);
  return d;
}

DecompositionType classify_rank6(KernelTag kernel, const ShapeArg& shape) {
  const int n = 5;
  const Weight pi0 = flips(n, {}), pi1 = flips(n, {0}), pi2 = flips(n, {0, 1});
  DecompositionType d;
  d.n = n;
  switch (kernel) {
    case KernelTag::Full:
      d = full_case(n);
      d.case_tag = 1;
      break;
    case KernelTag::SumZero:
      d = sumzero_case(n);
      d.case_tag = 2;
      break;
    case KernelTag::Diagonal: {
      auto s = require_shape(shape, kernel);
      auto sf = diagonal_model(n, s);  // rejects j != 1 and cyclic H
      d.case_tag = 3;
      d.components = {ss_elliptic(n, 1), cm_component(pi1, 5, std::nullopt), cm_component(pi2, 10, std::nullopt)};
      assign_isokummerian_ids(sf, d.components);
      d.notes.push_back("pi_2 and pi_3 are conjugate since |H| is divisible by 10");
      d.notes.push_back("F_10 embeds in F_20");
      if (s.h_name == "D5")
        d.notes.push_back("the orbit model of {+-1} x D5 keeps adjacent and non-adjacent two-flip weights in separate orbits");
      break;
    }
    case KernelTag::Zero: {
      auto s = require_shape(shape, kernel);
      auto sf = zero_model(n, s);  // rejects j outside {1, 5}
      if (s.j == n) {
        d.case_tag = 6;
        d.components = {cm_component(pi0, 16, std::nullopt)};
        d.notes.push_back("simple: [Q(pi_0):Q] = 32 and End^0 is the fixed field of H");
      } else if (is_cyclic(n, s)) {
        d.case_tag = 5;
        d.components = {cm_component(pi0, 1, Flavor::Ordinary), cm_component(pi1, 5, Flavor::Ordinary),
                        cm_component(pi2, 5, Flavor::Ordinary), cm_component(flips(n, {0, 2}), 5, Flavor::Ordinary)};
        d.notes.push_back("Gal(F_10/Q) = Z/10Z");
        d.notes.push_back("F_2 is contained in F_10");
        d.notes.push_back("p splits completely in F_10, so every factor is ordinary");
      } else {
        d.case_tag = 4;
        d.components = {cm_component(pi0, 1, Flavor::Ordinary), cm_component(pi1, 5, std::nullopt),
                        cm_component(pi2, 10, std::nullopt)};
        d.notes.push_back("pi_2 and pi_3 are conjugate since |H| is divisible by 10");
        d.notes.push_back("F_10 embeds in F_20");
        if (s.h_name == "D5")
          d.notes.push_back("the orbit model of {+-1} x D5 keeps adjacent and non-adjacent two-flip weights in separate orbits");
      }
      assign_isokummerian_ids(sf, d.components);
      if (d.case_tag == 5) {
        if (d.components[2].isokummerian_class_id != d.components[3].isokummerian_class_id)
          throw Error(ErrorCode::InternalInconsistency, "the two-flip factors are not isokummerian");
        d.notes.push_back(d.components[1].isokummerian_class_id == d.components[2].isokummerian_class_id
                              ? "the three five-dimensional factors are pairwise isokummerian"
                              : "the last two five-dimensional factors are isokummerian");
      }
      if (s.j == 1) {
        std::string why = s.h_name == "A5" || s.h_name == "S5"
                              ? "pi_1, pi_2, pi_3 conjugate needs 30 | |Gal|, so H is A5 or S5; the orbit of pi_1 under H "
                                "and complex conjugation is then stable only if j = 5, contradicting j = 1"
                              : "pi_1, pi_2, pi_3 conjugate needs 30 | |Gal|, impossible for H = " + s.h_name;
        d.excluded.push_back({"A^(1) x A^(15)", why});
        d.excluded.push_back({"simple", "[Q(pi_0):Q] = 2 when j = 1"});
      }
      break;
    }
    default: throw Error(ErrorCode::InvalidArgument, "kernel must be zero, diagonal, sumzero or full");
  }
  // A lone 15-dimensional complement is never a valid outcome.
  if (d.components.size() == 2 && d.components[1].dimension == 15)
    throw Error(ErrorCode::Inconsistent, "pattern A^(1) x A^(15) forces j = 5 while the shape has j = 1");
  d.algebra = algebra_label(d.components);
  check_dimension(d);
  return d;
}

DecompositionType classify_prime_rank(int n, KernelTag kernel, const ShapeArg& shape) {
  require_prime_rank(n);
  if (n == 5) return classify_rank6(kernel, shape);
  return classify_by_orbits(n, kernel, shape);
}

std::vector<EnumeratedRow> enumerate_table(int n) {
  require_prime_rank(n);
  std::vector<EnumeratedRow> rows;
  auto run = [&](KernelTag k, std::optional<GaloisShape> s) {
    EnumeratedRow row{k, s, std::nullopt, ""};
    try {
      row.result = classify_prime_rank(n, k, s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Inconsistent) throw;
      row.rejection = e.what();
    }
    rows.push_back(std::move(row));
  };
  run(KernelTag::Full, std::nullopt);
  run(KernelTag::SumZero, std::nullopt);
  auto shapes = galois_shapes(n);
  for (KernelTag k : {KernelTag::Diagonal, KernelTag::Zero})
    for (const auto& s : shapes) run(k, s);
  return rows;
}

namespace {

struct Pattern {
  int case_tag;
  // (dimension, multiplicity, required flavor)
  std::vector<std::tuple<int, int, std::optional<Flavor>>> parts;
};

const std::vector<Pattern>& rank6_patterns() {
  static const std::vector<Pattern> pats = {
      {1, {{1, 16, Flavor::Supersingular}}},
      {2, {{1, 1, Flavor::Ordinary}, {5, 1, Flavor::Mixed}, {5, 2, Flavor::Mixed}}},
      {3, {{1, 1, Flavor::Supersingular}, {5, 1, std::nullopt}, {10, 1, std::nullopt}}},
      {4, {{1, 1, Flavor::Ordinary}, {5, 1, std::nullopt}, {10, 1, std::nullopt}}},
      {5, {{1, 1, Flavor::Ordinary}, {5, 1, Flavor::Ordinary}, {5, 1, Flavor::Ordinary}, {5, 1, Flavor::Ordinary}}},
      {6, {{16, 1, std::nullopt}}},
  };
  return pats;
}

bool matches(const Pattern& pat, std::vector<ConcreteComponent> comps) {
  if (comps.size() != pat.parts.size()) return false;
  // Try every assignment of parts to components; at most four parts.
  std::vector<size_t> perm(comps.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (size_t i = 0; i < perm.size() && ok; ++i) {
      const auto& [dim, mult, fl] = pat.parts[i];
      const auto& c = comps[perm[i]];
      ok = c.dimension == dim && c.multiplicity == mult && (!fl || !c.flavor || *c.flavor == *fl);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

ConcreteMatch classify_concrete(const std::vector<ConcreteComponent>& comps) {
  long total = 0;
  for (const auto& c : comps) total += static_cast<long>(c.dimension) * c.multiplicity;
  if (total != 16) throw Error(ErrorCode::WrongDimension, "total dimension is " + std::to_string(total) + ", expected 16");
  ConcreteMatch m;
  bool slopes_known = std::all_of(comps.begin(), comps.end(), [](const ConcreteComponent& c) { return !c.slopes.empty(); });
  if (slopes_known) {
    int half = 0;
    for (const auto& c : comps) {
      auto it = c.slopes.find(make_rational(1, 2));
      if (it != c.slopes.end()) half += it->second * c.multiplicity;
    }
    std::set<int> allowed;
    for (KernelTag k : {KernelTag::Zero, KernelTag::Diagonal, KernelTag::SumZero, KernelTag::Full})
      for (int h : admissible_half_multiplicities(5, k)) allowed.insert(h);
    if (!allowed.count(half)) {
      m.reason = "slope 1/2 occurs with multiplicity " + std::to_string(half) + ", which no admissible assignment allows";
      return m;
    }
  }
  for (const auto& pat : rank6_patterns())
    if (matches(pat, comps)) {
      m.consistent = true;
      m.case_tag = pat.case_tag;
      m.reason = "matches case " + std::to_string(pat.case_tag);
      return m;
    }
  m.reason = "no rank-6 decomposition type has these dimensions, multiplicities and flavors";
  return m;
}

ConcreteMatch classify_concrete(const Decomposition& decomp) {
  std::vector<ConcreteComponent> comps;
  for (const auto& [cls, mult] : decomp.classes) comps.push_back({cls.dimension, mult, cls.flavor, cls.slopes});
  return classify_concrete(comps);
}

}  // namespace weilkit
