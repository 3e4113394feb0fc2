#include "weilkit/lattice.hpp"

#include <algorithm>

#include "weilkit/error.hpp"
#include "weilkit/factor.hpp"

namespace weilkit {

namespace {

constexpr int kMaxRank = 24;

void check_n(int n, int cap) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (n > cap) throw Error(ErrorCode::RankTooLarge, "n = " + std::to_string(n) + " exceeds " + std::to_string(cap));
}

// Rows X^i * h mod (X^n - 1), i = 0..n-1.
IntMatrix circulant_rows(const IntPoly& h, int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= h.degree(); ++k) m(i, (i + k) % n) += h.coeff(k);
  return m;
}

IntMatrix rows_matrix(int n, const std::vector<std::vector<Integer>>& vectors) {
  IntMatrix m(0, n);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != n) throw Error(ErrorCode::InvalidArgument, "vector length differs from n");
    m.append_row(v);
  }
  return m;
}

}  // namespace

bool operator==(const CyclicLattice& a, const CyclicLattice& b) {
  return a.n == b.n && a.divisor_set == b.divisor_set && a.basis == b.basis && a.rank == b.rank;
}

std::string to_string(KernelTag t) {
  switch (t) {
    case KernelTag::Zero: return "zero";
    case KernelTag::Diagonal: return "diagonal";
    case KernelTag::SumZero: return "sumzero";
    case KernelTag::Full: return "full";
    case KernelTag::General: return "general";
  }
  return "general";
}

CyclicLattice cyclic_lattice(int n, const std::vector<long>& divisor_set) {
  check_n(n, kMaxRank);
  std::vector<long> ds = divisor_set;
  std::sort(ds.begin(), ds.end());
  if (std::adjacent_find(ds.begin(), ds.end()) != ds.end()) throw Error(ErrorCode::InvalidArgument, "repeated divisor");
  for (long d : ds)
    if (d < 1 || n % d != 0) throw Error(ErrorCode::InvalidArgument, std::to_string(d) + " does not divide " + std::to_string(n));
  IntPoly h = IntPoly::constant(1);
  int expected = 0;
  for (long d : divisors(n)) {
    if (std::binary_search(ds.begin(), ds.end(), d)) expected += static_cast<int>(euler_phi(d));
    else h = h * cyclotomic(d);
  }
  CyclicLattice lat;
  lat.n = n;
  lat.divisor_set = ds;
  lat.basis = hermite_normal_form(circulant_rows(h, n));
  lat.rank = lat.basis.rows();
  if (lat.rank != expected) throw Error(ErrorCode::InternalInconsistency, "lattice rank differs from the sum of phi(d)");
  return lat;
}

std::vector<CyclicLattice> saturated_cyclic_sublattices(int n) {
  check_n(n, kMaxRank);
  const std::vector<long> divs = divisors(n);
  std::vector<std::vector<long>> subsets;
  for (unsigned mask = 0; mask < (1u << divs.size()); ++mask) {
    std::vector<long> s;
    for (size_t i = 0; i < divs.size(); ++i)
      if (mask & (1u << i)) s.push_back(divs[i]);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end());
  std::vector<CyclicLattice> out;
  out.reserve(subsets.size());
  for (const auto& s : subsets) out.push_back(cyclic_lattice(n, s));
  return out;
}

CyclicLattice identify_lattice(int n, const std::vector<std::vector<Integer>>& vectors) {
  check_n(n, kMaxRank);
  IntMatrix span = hermite_normal_form(rows_matrix(n, vectors));
  // Saturation = (span tensor Q) meet Z^n, the kernel of the orthogonal complement.
  IntMatrix sat = integer_kernel(integer_kernel(span));
  if (!(sat == span)) throw Error(ErrorCode::InvalidArgument, "span has torsion in its quotient");
  for (auto& lat : saturated_cyclic_sublattices(n))
    if (lat.basis == span) return lat;
  throw Error(ErrorCode::InvalidArgument, "span is not stable under the cyclic shift");
}

KernelCase kernel_case(const CyclicLattice& lat) {
  KernelCase k;
  k.divisor_set = lat.divisor_set;
  if (lat.n < 2 || !is_prime(static_cast<std::uint64_t>(lat.n))) return k;
  const long n = lat.n;
  const auto& t = lat.divisor_set;
  if (t.empty()) k.tag = KernelTag::Zero;
  else if (t == std::vector<long>{1}) k.tag = KernelTag::Diagonal;
  else if (t == std::vector<long>{n}) k.tag = KernelTag::SumZero;
  else k.tag = KernelTag::Full;
  return k;
}

std::vector<Integer> shift(const std::vector<Integer>& v) {
  std::vector<Integer> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[(i + 1) % v.size()] = v[i];
  return out;
}

bool is_shift_stable(const CyclicLattice& lat) {
  for (int r = 0; r < lat.basis.rows(); ++r)
    if (!in_row_lattice(shift(lat.basis.row(r)), lat.basis)) return false;
  return true;
}

bool is_saturated(const CyclicLattice& lat) {
  for (const auto& d : smith_diagonal(lat.basis))
    if (d != 1) return false;
  return true;
}

std::vector<IntMatrix> brute_force_lattices(int n) {
  check_n(n, 8);
  IntPoly xn = IntPoly::monomial(1, n) - IntPoly::constant(1);
  std::vector<IntPoly> irr;
  for (const auto& [g, e] : factor_over_integers(xn)) irr.push_back(g);
  IntMatrix s(n, n);
  for (int i = 0; i < n; ++i) s((i + 1) % n, i) = 1;
  std::vector<IntMatrix> powers{IntMatrix::identity(n)};
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * s);
  std::vector<IntMatrix> out;
  for (unsigned mask = 0; mask < (1u << irr.size()); ++mask) {
    IntPoly g = IntPoly::constant(1);
    for (size_t i = 0; i < irr.size(); ++i)
      if (mask & (1u << i)) g = g * irr[i];
    IntMatrix gs(n, n);
    for (int k = 0; k <= g.degree(); ++k)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) gs(r, c) += g.coeff(k) * powers[static_cast<size_t>(k)](r, c);
    IntMatrix ker = integer_kernel(gs);
    if (std::find(out.begin(), out.end(), ker) == out.end()) out.push_back(ker);
  }
  return out;
}

int brute_force_count(int n) { return static_cast<int>(brute_force_lattices(n).size()); }

}  // namespace weilkit
