#include "weilkit/matrix.hpp"

#include <algorithm>

#include "weilkit/error.hpp"

namespace weilkit {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != cols)
      throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(int r) const {
  auto first = data_.begin() + static_cast<long>(r) * cols_;
  return {first, first + cols_};
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out;
  out.reserve(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void IntMatrix::append_row(const std::vector<Integer>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
  if (static_cast<int>(r.size()) != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) mpz_addmul(out(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return out;
}

Integer determinant(IntMatrix m) {
  const int n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

int rank(IntMatrix m) {
  // Fraction-free elimination; only zero/nonzero pattern matters.
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.swap_rows(r, piv);
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Integer a = m(r, c), b = m(i, c);
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      a /= g;
      b /= g;
      for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) * a - m(r, j) * b;
    }
    ++r;
  }
  return r;
}

IntMatrix hermite_normal_form(IntMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclid down the column until only row r is nonzero.
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (m(i, c) != 0 && (best < 0 || abs(m(i, c)) < abs(m(best, c)))) best = i;
      if (best < 0) break;
      m.swap_rows(r, best);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        for (int j = c; j < cols; ++j) mpz_submul(m(i, j).get_mpz_t(), q.get_mpz_t(), m(r, j).get_mpz_t());
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (int j = c; j < cols; ++j) m(r, j) = -m(r, j);
    for (int i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      if (q == 0) continue;
      for (int j = c; j < cols; ++j) mpz_submul(m(i, j).get_mpz_t(), q.get_mpz_t(), m(r, j).get_mpz_t());
    }
    pivots.push_back(c);
    ++r;
  }
  IntMatrix out(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return out;
}

std::vector<Integer> smith_diagonal(IntMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<Integer> diag;
  int t = 0;
  while (t < rows && t < cols) {
    // Pick the smallest nonzero entry of the trailing block as pivot.
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pr < 0 || abs(m(i, j)) < abs(m(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    m.swap_rows(t, pr);
    if (pc != t)
      for (int i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));
    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (m(i, t) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
      for (int j = t; j < cols; ++j) mpz_submul(m(i, j).get_mpz_t(), q.get_mpz_t(), m(t, j).get_mpz_t());
      if (m(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m(t, j) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
      for (int i = t; i < rows; ++i) mpz_submul(m(i, j).get_mpz_t(), q.get_mpz_t(), m(i, t).get_mpz_t());
      if (m(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Enforce divisibility: fold any entry not divisible by the pivot into row t.
    int bad_row = -1;
    for (int i = t + 1; i < rows && bad_row < 0; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
          bad_row = i;
          break;
        }
    if (bad_row >= 0) {
      for (int j = t; j < cols; ++j) m(t, j) += m(bad_row, j);
      continue;
    }
    diag.push_back(abs(m(t, t)));
    ++t;
  }
  return diag;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const int n = a.cols();
  const int m = a.rows();
  // Row-reduce [A^T | I]; rows whose A^T part vanishes span the kernel.
  IntMatrix aug(n, m + n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug(i, j) = a(j, i);
    aug(i, m + i) = 1;
  }
  IntMatrix h = hermite_normal_form(aug);
  IntMatrix ker(0, n);
  for (int i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < m; ++j)
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    std::vector<Integer> v(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = h(i, m + j);
    ker.append_row(v);
  }
  return hermite_normal_form(ker);
}

std::vector<Integer> reduce_by_hnf(std::vector<Integer> v, const IntMatrix& hnf) {
  for (int r = 0; r < hnf.rows(); ++r) {
    int pc = 0;
    while (pc < hnf.cols() && hnf(r, pc) == 0) ++pc;
    if (pc == hnf.cols()) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v[static_cast<size_t>(pc)].get_mpz_t(), hnf(r, pc).get_mpz_t());
    if (q == 0) continue;
    for (int j = pc; j < hnf.cols(); ++j) mpz_submul(v[static_cast<size_t>(j)].get_mpz_t(), q.get_mpz_t(), hnf(r, j).get_mpz_t());
  }
  return v;
}

bool in_row_lattice(const std::vector<Integer>& v, const IntMatrix& hnf) {
  auto r = reduce_by_hnf(v, hnf);
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace weilkit
