#include "arrange/fp.hpp"

#include <algorithm>
#include <stdexcept>

namespace arrange {

bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

FpMatrix FpMatrix::zero(int modulus, int rows, int cols) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  FpMatrix m;
  m.modulus = modulus;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<std::size_t>(rows) * cols, 0);
  return m;
}

FpMatrix FpMatrix::identity(int modulus, int n) {
  FpMatrix m = zero(modulus, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(int modulus, const std::vector<FpVector>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != c)
      throw std::invalid_argument("ragged rows");
  FpMatrix m = zero(modulus, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      int v = rows[i][j] % modulus;
      if (v < 0) v += modulus;
      m.at(i, j) = v;
    }
  return m;
}

std::vector<FpVector> FpMatrix::row_vectors() const {
  std::vector<FpVector> out(rows);
  for (int i = 0; i < rows; ++i)
    out[i] = FpVector(a.begin() + static_cast<std::size_t>(i) * cols,
                      a.begin() + static_cast<std::size_t>(i + 1) * cols);
  return out;
}

namespace {

int inv_mod(int x, int p) {
  // p prime, 0 < x < p
  int r = 1, b = x, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<int>(1LL * r * b % p);
    b = static_cast<int>(1LL * b * b % p);
    e >>= 1;
  }
  return r;
}

void require_prime(int modulus) {
  if (!is_prime(modulus)) throw CompositeModulusError(modulus);
}

// Reduced row echelon form in place; returns pivot column list.
// Deterministic: scans columns left to right, picks the first row with a
// nonzero entry in the current column.
std::vector<int> rref(FpMatrix& m) {
  require_prime(m.modulus);
  const int p = m.modulus;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    int inv = inv_mod(m.at(r, c), p);
    for (int j = 0; j < m.cols; ++j)
      m.at(r, j) = static_cast<int>(1LL * m.at(r, j) * inv % p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      int f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) {
        int v = m.at(i, j) - static_cast<int>(1LL * f * m.at(r, j) % p);
        m.at(i, j) = v < 0 ? v + p : v;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const FpMatrix& m) {
  FpMatrix w = m;
  return static_cast<int>(rref(w).size());
}

FpMatrix kernel_basis(const FpMatrix& m) {
  require_prime(m.modulus);
  const int p = m.modulus;
  // Left kernel of m = right kernel of m^T.
  FpMatrix t = FpMatrix::zero(p, m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  std::vector<int> pivots = rref(t);
  std::vector<bool> is_pivot(m.rows, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (int f = 0; f < m.rows; ++f) {
    if (is_pivot[f]) continue;
    FpVector v(m.rows, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      int coeff = t.at(static_cast<int>(i), f);
      v[pivots[i]] = coeff == 0 ? 0 : p - coeff;
    }
    basis.push_back(std::move(v));
  }
  return FpMatrix::from_rows(p, basis);
}

FpVector mul_left(const FpVector& x, const FpMatrix& m) {
  if (static_cast<int>(x.size()) != m.rows)
    throw std::invalid_argument("vector length does not match matrix rows");
  FpVector out(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols; ++j)
      out[j] = static_cast<int>((out[j] + 1LL * x[i] * m.at(i, j)) % m.modulus);
  }
  return out;
}

bool in_span(const FpMatrix& basis, const FpVector& v) {
  if (static_cast<int>(v.size()) != basis.cols)
    throw std::invalid_argument("vector length does not match basis width");
  // Stack basis above v and compare ranks.
  std::vector<FpVector> rows = basis.row_vectors();
  int r0 = rank(basis);
  rows.push_back(v);
  return rank(FpMatrix::from_rows(basis.modulus, rows)) == r0;
}

CodeSummary min_weight(const FpMatrix& basis, long long cap) {
  require_prime(basis.modulus);
  const int p = basis.modulus;
  const int k = basis.rows;
  const int n = basis.cols;
  if (k == 0) throw std::invalid_argument("code has no nonzero codeword");
  __int128 total = 1;
  for (int i = 0; i < k; ++i) {
    total *= p;
    if (total > cap) {
      long long reported = total > (__int128)1 << 62 ? -1 : (long long)total;
      throw SearchSpaceTooLarge(reported, cap);
    }
  }
  CodeSummary best;
  best.modulus = p;
  best.length = n;
  best.dimension = rank(basis);
  best.min_weight = n + 1;
  std::vector<int> coeff(k, 0);
  FpVector word(n, 0);
  long long count = 0;
  // Odometer enumeration over all coefficient tuples; the codeword is updated
  // incrementally when digit c advances (add basis row c once, and when a
  // digit wraps p->0 subtract p-1 copies, i.e. add one more to cancel).
  auto add_row = [&](int row, int times) {
    if (times == 0) return;
    for (int j = 0; j < n; ++j)
      word[j] = static_cast<int>((word[j] + 1LL * times * basis.at(row, j)) % p);
  };
  while (true) {
    int c = 0;
    while (c < k) {
      ++coeff[c];
      add_row(c, 1);
      if (coeff[c] < p) break;
      coeff[c] = 0;
      ++c;
    }
    if (c == k) break;  // wrapped past the last digit: done
    ++count;
    int w = 0;
    for (int j = 0; j < n; ++j)
      if (word[j] != 0) ++w;
    if (w == 0) continue;  // dependent combination; only nonzero codewords count
    if (w < best.min_weight ||
        (w == best.min_weight &&
         std::lexicographical_compare(word.begin(), word.end(),
                                      best.min_weight_witness.begin(),
                                      best.min_weight_witness.end()))) {
      best.min_weight = w;
      best.min_weight_witness = word;
    }
  }
  best.enumerated = count;
  if (best.min_weight_witness.empty())
    throw std::invalid_argument("code has no nonzero codeword");
  return best;
}

}  // namespace arrange
