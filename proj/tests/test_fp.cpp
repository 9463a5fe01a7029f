#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "arrange/arrangement.hpp"
#include "arrange/fp.hpp"
#include "fixtures.hpp"

using namespace arrange;

namespace {

FpMatrix plane7_incidence(int modulus) {
  return fixtures::incidence_fp(fixtures::plane7(), modulus);
}

FpMatrix incidence_matrix(const Arrangement& a, int modulus) {
  return fixtures::incidence_fp(a, modulus);
}

// Independent rank oracle: eliminates in the reverse column order with
// last-nonzero pivoting, sharing no code path with arrange::rank.
int rank_oracle(FpMatrix m) {
  const int p = m.modulus;
  auto inv = [&](int x) {
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
      // square-and-multiply without the helper used by the library
      if (e & 1) r = static_cast<int>(1LL * r * x % p);
      x = static_cast<int>(1LL * x * x % p);
    }
    return r;
  };
  int rk = 0;
  std::vector<bool> used(m.rows, false);
  for (int c = m.cols - 1; c >= 0; --c) {
    int piv = -1;
    for (int i = m.rows - 1; i >= 0; --i)
      if (!used[i] && m.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    used[piv] = true;
    ++rk;
    int f = inv(m.at(piv, c));
    for (int i = 0; i < m.rows; ++i) {
      if (i == piv || m.at(i, c) == 0) continue;
      int g = static_cast<int>(1LL * m.at(i, c) * f % p);
      for (int j = 0; j < m.cols; ++j) {
        int v = m.at(i, j) - static_cast<int>(1LL * g * m.at(piv, j) % p);
        m.at(i, j) = (v % p + p) % p;
      }
    }
  }
  return rk;
}

FpMatrix random_matrix(std::mt19937& rng, int modulus, int rows, int cols) {
  FpMatrix m = FpMatrix::zero(modulus, rows, cols);
  std::uniform_int_distribution<int> dist(0, modulus - 1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("is_prime basics") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-7));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("rank: fixed examples") {
  CHECK(rank(FpMatrix::zero(2, 3, 4)) == 0);
  CHECK(rank(FpMatrix::identity(2, 5)) == 5);
  CHECK(rank(FpMatrix::identity(7, 4)) == 4);
  // 7-line plane incidence over Z/2: rank 4 (independent oracle, frozen).
  CHECK(rank(plane7_incidence(2)) == 4);
  // The determinant is 24, so the rank drops (to 6) over Z/3 as well and is
  // full elsewhere.
  CHECK(rank(plane7_incidence(3)) == 6);
  CHECK(rank(plane7_incidence(5)) == 7);
  CHECK(rank(plane7_incidence(7)) == 7);
}

TEST_CASE("rank: 13-line plane over Z/3 is 7 (frozen)") {
  CHECK(rank(incidence_matrix(projective_plane(3), 3)) == 7);
}

TEST_CASE("rank requires a prime modulus") {
  FpMatrix m = FpMatrix::identity(4, 3);
  CHECK_THROWS_AS(rank(m), CompositeModulusError);
  try {
    rank(m);
  } catch (const CompositeModulusError& e) {
    CHECK(e.modulus == 4);
  }
}

TEST_CASE("rank agrees with an independent elimination order") {
  std::mt19937 rng(20260825);
  for (int modulus : {2, 3, 5}) {
    for (int trial = 0; trial < 50; ++trial) {
      FpMatrix m = random_matrix(rng, modulus, 5, 7);
      CAPTURE(modulus);
      CAPTURE(trial);
      CHECK(rank(m) == rank_oracle(m));
    }
  }
}

TEST_CASE("kernel_basis: fixed examples") {
  // Identity has trivial left kernel.
  CHECK(kernel_basis(FpMatrix::identity(2, 3)).rows == 0);
  // All-ones 3x1 column over Z/2: x1+x2+x3 = 0, nullity 2, canonical basis.
  FpMatrix col = FpMatrix::from_rows(2, {{1}, {1}, {1}});
  FpMatrix k = kernel_basis(col);
  CHECK(k.rows == 2);
  CHECK(k.row_vectors() == std::vector<FpVector>{{1, 1, 0}, {1, 0, 1}});
  // All-ones 1x3 row over Z/2: the single row is nonzero, so nullity 0.
  CHECK(kernel_basis(FpMatrix::from_rows(2, {{1, 1, 1}})).rows == 0);
  // Zero matrix: every coefficient vector is in the kernel.
  FpMatrix z = kernel_basis(FpMatrix::zero(3, 4, 2));
  CHECK(z == FpMatrix::identity(3, 4));
}

TEST_CASE("kernel_basis: 7-line plane code over Z/2") {
  FpMatrix inc = plane7_incidence(2);
  FpMatrix k = kernel_basis(inc);
  CHECK(k.rows == 3);  // frozen: nullity 7 - 4
  for (const FpVector& v : k.row_vectors()) {
    FpVector prod = mul_left(v, inc);
    CHECK(std::all_of(prod.begin(), prod.end(), [](int x) { return x == 0; }));
  }
  // The 4-line relation L2+L3+L5+L6 = 0 lies in the span.
  CHECK(in_span(k, FpVector{0, 1, 1, 0, 1, 1, 0}));
  // A single line is not a relation.
  CHECK_FALSE(in_span(k, FpVector{1, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("kernel_basis: rank-nullity and orthogonality properties") {
  std::mt19937 rng(7);
  for (int modulus : {2, 3, 5}) {
    for (int trial = 0; trial < 30; ++trial) {
      FpMatrix m = random_matrix(rng, modulus, 6, 4);
      FpMatrix k = kernel_basis(m);
      CAPTURE(modulus);
      CAPTURE(trial);
      CHECK(rank(m) + k.rows == m.rows);
      if (k.rows > 0) CHECK(rank(k) == k.rows);  // basis is independent
      for (const FpVector& v : k.row_vectors()) {
        FpVector prod = mul_left(v, m);
        CHECK(std::all_of(prod.begin(), prod.end(), [](int x) { return x == 0; }));
      }
    }
  }
}

TEST_CASE("kernel_basis requires a prime modulus") {
  CHECK_THROWS_AS(kernel_basis(FpMatrix::zero(6, 2, 2)), CompositeModulusError);
}

TEST_CASE("mul_left validates shapes") {
  FpMatrix m = FpMatrix::identity(2, 3);
  CHECK_THROWS_AS(mul_left(FpVector{1, 0}, m), std::invalid_argument);
  CHECK(mul_left(FpVector{1, 0, 1}, m) == FpVector{1, 0, 1});
}

TEST_CASE("min_weight: two unit vectors") {
  FpMatrix basis = FpMatrix::from_rows(2, {{1, 0}, {0, 1}});
  CodeSummary s = min_weight(basis);
  CHECK(s.modulus == 2);
  CHECK(s.length == 2);
  CHECK(s.dimension == 2);
  CHECK(s.min_weight == 1);
  CHECK(s.min_weight_witness == FpVector{0, 1});  // lex-smallest weight-1 word
  CHECK(s.enumerated == 3);
}

TEST_CASE("min_weight: dependent generators are handled") {
  FpMatrix basis = FpMatrix::from_rows(2, {{1, 1}, {1, 1}});
  CodeSummary s = min_weight(basis);
  CHECK(s.dimension == 1);
  CHECK(s.min_weight == 2);
  CHECK(s.min_weight_witness == FpVector{1, 1});
}

TEST_CASE("min_weight: 7-line plane code has minimum weight 4 (frozen)") {
  FpMatrix k = kernel_basis(plane7_incidence(2));
  CodeSummary s = min_weight(k);
  CHECK(s.dimension == 3);
  CHECK(s.min_weight == 4);
  int w = 0;
  for (int x : s.min_weight_witness)
    if (x != 0) ++w;
  CHECK(w == 4);
  CHECK(in_span(k, s.min_weight_witness));
}

TEST_CASE("min_weight: 13-line plane code has minimum weight 6 (frozen)") {
  FpMatrix k = kernel_basis(incidence_matrix(projective_plane(3), 3));
  CHECK(k.rows == 6);
  CodeSummary s = min_weight(k);
  CHECK(s.min_weight == 6);
  CHECK(in_span(k, s.min_weight_witness));
}

TEST_CASE("min_weight: brute-force cross-check on random codes") {
  std::mt19937 rng(99);
  for (int modulus : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      FpMatrix basis = random_matrix(rng, modulus, 4, 6);
      if (rank(basis) == 0) continue;  // all-zero generator set has no code
      CodeSummary s = min_weight(basis);
      // Independent recursive span enumeration, last row first.
      int best = 7;
      std::vector<int> word(6, 0);
      auto rec = [&](auto&& self, int row) -> void {
        if (row < 0) {
          int w = 0;
          for (int x : word)
            if (x != 0) ++w;
          if (w > 0) best = std::min(best, w);
          return;
        }
        for (int c = 0; c < modulus; ++c) {
          self(self, row - 1);
          for (int j = 0; j < 6; ++j)
            word[j] = (word[j] + basis.at(row, j)) % modulus;
        }
        // after `modulus` additions the row contribution cancels
      };
      rec(rec, 3);
      CAPTURE(modulus);
      CAPTURE(trial);
      CHECK(s.min_weight == best);
    }
  }
}

TEST_CASE("min_weight guards the enumeration size") {
  FpMatrix basis = FpMatrix::zero(2, 40, 3);
  for (int i = 0; i < 40; ++i) basis.at(i, i % 3) = 1;
  CHECK_THROWS_AS(min_weight(basis, 1 << 20), SearchSpaceTooLarge);
  try {
    min_weight(basis, 1 << 20);
  } catch (const SearchSpaceTooLarge& e) {
    CHECK(e.cap == 1 << 20);
    CHECK(e.size > e.cap);
  }
  // Exactly at the cap is allowed: 2^2 = 4 <= 4.
  FpMatrix tiny = FpMatrix::from_rows(2, {{1, 0}, {0, 1}});
  CHECK_NOTHROW(min_weight(tiny, 4));
}

TEST_CASE("min_weight rejects trivial codes and composite moduli") {
  CHECK_THROWS_AS(min_weight(FpMatrix::zero(2, 0, 5)), std::invalid_argument);
  CHECK_THROWS_AS(min_weight(FpMatrix::zero(2, 2, 5)), std::invalid_argument);
  CHECK_THROWS_AS(min_weight(FpMatrix::identity(4, 2)), CompositeModulusError);
}
