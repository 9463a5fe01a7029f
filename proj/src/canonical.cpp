#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <vector>

#include "arrange/arrangement.hpp"

namespace arrange {

namespace {

// Canonical form = the lexicographically minimal flattening over all
// simultaneous row and column permutations.  Both implementations below run
// the same branch and bound: rows are placed one at a time; the column order
// is only ever constrained through an ordered partition of the columns into
// groups.  Placing a row against a partition yields the minimal row string
// by putting, inside every group, the 0-columns before the 1-columns; that
// string is determined by the per-group one-counts ("key").  Rows achieving
// the minimal key are tied and each refines the partition differently, so
// the search branches on all of them; a greedy-per-row scheme is exact
// because lexicographic comparison weighs earlier rows first.

// Fast path: column sets fit in one 64-bit mask.
struct CanonSearchMask {
  int rows, cols;
  std::vector<std::uint64_t> rowm;
  std::vector<std::uint8_t> used;
  std::vector<std::uint8_t> acc, best;
  bool have_best = false;
  // Per-depth scratch, allocated once.
  std::vector<std::vector<std::uint64_t>> groups;
  std::vector<std::vector<int>> key_at, cand_at;

  explicit CanonSearchMask(const IncidenceMatrix& m)
      : rows(static_cast<int>(m.size())),
        cols(m.empty() ? 0 : static_cast<int>(m.front().size())) {
    rowm.resize(rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (m[i][j]) rowm[i] |= 1ULL << j;
    used.assign(rows, 0);
    groups.resize(rows + 1);
    key_at.resize(rows + 1);
    cand_at.resize(rows + 1);
    for (int d = 0; d <= rows; ++d) {
      groups[d].reserve(cols);
      key_at[d].reserve(cols);
      cand_at[d].reserve(rows);
    }
    acc.reserve(static_cast<std::size_t>(rows) * cols);
  }

  void run() {
    if (cols > 0)
      groups[0].push_back(cols == 64 ? ~0ULL : (1ULL << cols) - 1);
    rec(0);
  }

  void rec(int depth) {
    if (depth == rows) {
      if (!have_best || std::memcmp(acc.data(), best.data(), acc.size()) < 0)
        best = acc, have_best = true;
      return;
    }
    const auto& G = groups[depth];
    auto& key = key_at[depth];
    auto& cand = cand_at[depth];
    key.clear();
    cand.clear();
    for (int i = 0; i < rows; ++i) {
      if (used[i]) continue;
      if (cand.empty()) {
        for (std::uint64_t g : G) key.push_back(std::popcount(rowm[i] & g));
        cand.push_back(i);
        continue;
      }
      int cmp = 0;
      for (std::size_t g = 0; g < G.size(); ++g) {
        int c = std::popcount(rowm[i] & G[g]);
        if (c != key[g]) {
          cmp = c < key[g] ? -1 : 1;
          break;
        }
      }
      if (cmp > 0) continue;
      if (cmp == 0) {
        cand.push_back(i);
      } else {
        key.clear();
        for (std::uint64_t g : G) key.push_back(std::popcount(rowm[i] & g));
        cand.clear();
        cand.push_back(i);
      }
    }
    const std::size_t accLen = acc.size();
    for (std::size_t g = 0; g < G.size(); ++g) {
      int size = std::popcount(G[g]);
      acc.insert(acc.end(), size - key[g], 0);
      acc.insert(acc.end(), key[g], 1);
    }
    // No completion of a prefix already larger than the best can win.
    if (have_best && std::memcmp(acc.data(), best.data(), acc.size()) > 0) {
      acc.resize(accLen);
      return;
    }
    for (int i : cand) {
      auto& next = groups[depth + 1];
      next.clear();
      for (std::uint64_t g : G) {
        std::uint64_t ones = g & rowm[i];
        std::uint64_t zeros = g & ~rowm[i];
        if (zeros) next.push_back(zeros);
        if (ones) next.push_back(ones);
      }
      used[i] = 1;
      rec(depth + 1);
      used[i] = 0;
    }
    acc.resize(accLen);
  }
};

// General path for matrices wider than 64 columns: same algorithm with
// explicit column index lists.
struct CanonSearchGeneral {
  const IncidenceMatrix& m;
  int rows, cols;
  std::vector<std::uint8_t> best;
  bool have_best = false;

  explicit CanonSearchGeneral(const IncidenceMatrix& mat)
      : m(mat),
        rows(static_cast<int>(mat.size())),
        cols(mat.empty() ? 0 : static_cast<int>(mat.front().size())) {}

  void run() {
    std::vector<std::vector<int>> groups;
    if (cols > 0) {
      groups.emplace_back(cols);
      std::iota(groups.back().begin(), groups.back().end(), 0);
    }
    std::vector<std::uint8_t> used(rows, 0);
    std::vector<std::uint8_t> acc;
    acc.reserve(static_cast<std::size_t>(rows) * cols);
    rec(used, groups, acc, 0);
  }

  void rec(std::vector<std::uint8_t>& used, const std::vector<std::vector<int>>& groups,
           std::vector<std::uint8_t>& acc, int depth) {
    if (depth == rows) {
      if (!have_best || acc < best) {
        best = acc;
        have_best = true;
      }
      return;
    }
    std::vector<int> bestKey;
    std::vector<int> cand;
    std::vector<int> key(groups.size());
    for (int i = 0; i < rows; ++i) {
      if (used[i]) continue;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        int ones = 0;
        for (int c : groups[g]) ones += m[i][c];
        key[g] = ones;
      }
      if (cand.empty() || key < bestKey) {
        bestKey = key;
        cand.assign(1, i);
      } else if (key == bestKey) {
        cand.push_back(i);
      }
    }
    std::size_t accLen = acc.size();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      int z = static_cast<int>(groups[g].size()) - bestKey[g];
      acc.insert(acc.end(), z, 0);
      acc.insert(acc.end(), bestKey[g], 1);
    }
    if (have_best) {
      auto cmp = std::lexicographical_compare_three_way(
          acc.begin(), acc.end(), best.begin(), best.begin() + static_cast<long>(acc.size()));
      if (cmp > 0) {
        acc.resize(accLen);
        return;
      }
    }
    for (int i : cand) {
      std::vector<std::vector<int>> refined;
      refined.reserve(groups.size() * 2);
      for (const auto& g : groups) {
        std::vector<int> zeros, ones;
        for (int c : g)
          (m[i][c] ? ones : zeros).push_back(c);
        if (!zeros.empty()) refined.push_back(std::move(zeros));
        if (!ones.empty()) refined.push_back(std::move(ones));
      }
      used[i] = 1;
      rec(used, refined, acc, depth + 1);
      used[i] = 0;
    }
    acc.resize(accLen);
  }
};

}  // namespace

std::vector<std::uint8_t> canonical_incidence(const IncidenceMatrix& m) {
  if (m.empty() || m.front().empty()) return {};
  if (m.front().size() <= 64) {
    CanonSearchMask s(m);
    s.run();
    return s.best;
  }
  CanonSearchGeneral s(m);
  s.run();
  return s.best;
}

}  // namespace arrange
