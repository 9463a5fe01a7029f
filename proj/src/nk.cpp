#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "arrange/arrangement.hpp"

namespace arrange {

namespace {

long long search_budget(long long requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ARRANGE_SEARCH_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50'000'000;
}

}  // namespace

std::optional<NkCertificate> nk_certificate(const Arrangement& a, int n, int k) {
  // A certificate needs k >= 2, n >= k(k-1)+1, and (by incidence counting)
  // exactly n lines; anything else simply has no certificate.
  if (k < 2 || n < k * (k - 1) + 1) return std::nullopt;
  const int P = a.points();
  const int L = a.lines();
  if (L != n) return std::nullopt;
  std::vector<int> candidates;
  for (int q = 0; q < P; ++q)
    if (a.multiplicity(q) == k) candidates.push_back(q);
  if (static_cast<int>(candidates.size()) < n) return std::nullopt;

  // Count of remaining candidates on each line, for pruning.
  std::vector<int> cand_on_line(L, 0);
  for (int q : candidates)
    for (int l : a.lines_through(q)) ++cand_on_line[l];

  std::vector<int> line_count(L, 0);
  std::vector<int> chosen;
  std::optional<NkCertificate> result;

  // Choose candidates in increasing order; each line must end at exactly k.
  auto rec = [&](auto&& self, std::size_t idx) -> bool {
    if (static_cast<int>(chosen.size()) == n) {
      for (int l = 0; l < L; ++l)
        if (line_count[l] != k) return false;
      result = NkCertificate{n, k, chosen};
      return true;
    }
    if (candidates.size() - idx < n - chosen.size()) return false;
    for (int l = 0; l < L; ++l)
      if (line_count[l] + cand_on_line[l] < k) return false;
    if (idx == candidates.size()) return false;
    int q = candidates[idx];
    // Either take q ...
    bool fits = true;
    for (int l : a.lines_through(q))
      if (line_count[l] >= k) { fits = false; break; }
    if (fits) {
      for (int l : a.lines_through(q)) {
        ++line_count[l];
        --cand_on_line[l];
      }
      chosen.push_back(q);
      if (self(self, idx + 1)) return true;
      chosen.pop_back();
      for (int l : a.lines_through(q)) {
        --line_count[l];
        ++cand_on_line[l];
      }
    }
    // ... or skip it.
    for (int l : a.lines_through(q)) --cand_on_line[l];
    bool found = self(self, idx + 1);
    for (int l : a.lines_through(q)) ++cand_on_line[l];
    return found;
  };
  rec(rec, 0);
  return result;
}

namespace {

// Pair bitset: one bit per unordered pair of lines.
struct PairMask {
  std::vector<std::uint64_t> w;
  explicit PairMask(int bits) : w((bits + 63) / 64, 0) {}
  void set(int b) { w[b >> 6] |= 1ULL << (b & 63); }
  bool intersects(const PairMask& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  void orWith(const PairMask& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }
  void andNotWith(const PairMask& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
};

struct NkSearch {
  int n, k;
  std::size_t limit;
  long long budget;
  long long nodes = 0;

  std::vector<std::vector<int>> combs;  // candidate rows: sorted k-subsets
  std::vector<std::uint64_t> masks;
  std::vector<PairMask> pairm;
  std::vector<int> first;  // smallest element of each candidate

  std::vector<int> counts;
  std::vector<int> chosen_rows;  // candidate indices (or -1 for base rows)
  std::vector<std::uint64_t> chosen_masks;
  PairMask covered{1};

  std::map<std::vector<std::uint8_t>, IncidenceMatrix> classes;  // canonical -> completed

  NkSearch(int n, int k, std::size_t limit, long long budget)
      : n(n), k(k), limit(limit), budget(budget), covered(n * (n - 1) / 2) {}

  int pair_id(int a, int b) const {  // a < b
    // index in the lexicographic list of pairs over n elements
    return a * n - a * (a + 1) / 2 + (b - a - 1);
  }

  void build_candidates() {
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      std::uint64_t m = 0;
      PairMask pm(n * (n - 1) / 2);
      for (int i = 0; i < k; ++i) {
        m |= 1ULL << comb[i];
        for (int j = i + 1; j < k; ++j) pm.set(pair_id(comb[i], comb[j]));
      }
      combs.push_back(comb);
      masks.push_back(m);
      pairm.push_back(std::move(pm));
      first.push_back(comb[0]);
      // next combination
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  void run() {
    counts.assign(n, 0);
    // Normalized stem: the k lines through point 0 use points
    // {0} + {(k-1)j+1 .. (k-1)j+k-1}; any configuration can be relabeled
    // this way, so completeness is preserved.
    for (int j = 0; j < k; ++j) {
      std::vector<int> comb{0};
      for (int c = (k - 1) * j + 1; c <= (k - 1) * j + k - 1; ++c) comb.push_back(c);
      std::uint64_t m = 0;
      PairMask pm(n * (n - 1) / 2);
      for (std::size_t i = 0; i < comb.size(); ++i) {
        m |= 1ULL << comb[i];
        ++counts[comb[i]];
        for (std::size_t l = i + 1; l < comb.size(); ++l)
          pm.set(pair_id(comb[i], comb[l]));
      }
      chosen_rows.push_back(-1);
      chosen_masks.push_back(m);
      covered.orWith(pm);
    }
    rec(0);
  }

  bool limited() const { return limit != 0 && classes.size() >= limit; }

  void rec(std::size_t lo) {
    if (limited()) return;
    if (++nodes > budget)
      throw SearchSpaceTooLarge("search_nk: node budget " + std::to_string(budget) +
                                " exceeded");
    const int depth = static_cast<int>(chosen_masks.size());
    if (depth == n) {
      record();
      return;
    }
    const int rows_left = n - depth;
    int jstar = -1;
    for (int c = 0; c < n; ++c) {
      int deficit = k - counts[c];
      if (deficit > rows_left) return;
      if (deficit > 0 && jstar < 0) jstar = c;
    }
    if (jstar < 0) return;  // all columns full but rows remain
    // Rows are kept in increasing candidate order; the next row must start
    // with the first deficient column (see the completeness argument in the
    // tests), which prunes hard.
    for (std::size_t idx = lo; idx < combs.size(); ++idx) {
      if (limited()) return;
      if (first[idx] > jstar) break;
      if (first[idx] < jstar) continue;
      bool fits = true;
      for (int c : combs[idx])
        if (counts[c] >= k) { fits = false; break; }
      if (!fits) continue;
      if (pairm[idx].intersects(covered)) continue;
      for (int c : combs[idx]) ++counts[c];
      chosen_rows.push_back(static_cast<int>(idx));
      chosen_masks.push_back(masks[idx]);
      covered.orWith(pairm[idx]);
      rec(idx + 1);
      covered.andNotWith(pairm[idx]);
      chosen_masks.pop_back();
      chosen_rows.pop_back();
      for (int c : combs[idx]) --counts[c];
    }
  }

  void record() {
    // Complete: add a double point for each uncovered line pair.
    std::vector<std::pair<int, int>> doublepts;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((chosen_masks[i] & chosen_masks[j]) == 0) doublepts.emplace_back(i, j);
    const int P = n + static_cast<int>(doublepts.size());
    IncidenceMatrix inc(n, std::vector<std::uint8_t>(P, 0));
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c)
        if (chosen_masks[i] >> c & 1) inc[i][c] = 1;
    for (std::size_t d = 0; d < doublepts.size(); ++d) {
      inc[doublepts[d].first][n + static_cast<int>(d)] = 1;
      inc[doublepts[d].second][n + static_cast<int>(d)] = 1;
    }
    // Dedup key: for k >= 3 the n x n distinguished core suffices, because
    // any isomorphism of completed arrangements preserves multiplicities and
    // therefore restricts to the cores (and conversely extends from them).
    // For k = 2 distinguished and double points both have multiplicity 2, so
    // the full matrix is canonicalized instead.
    std::vector<std::uint8_t> canon;
    if (k >= 3) {
      IncidenceMatrix core(n, std::vector<std::uint8_t>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c)
          if (chosen_masks[i] >> c & 1) core[i][c] = 1;
      canon = canonical_incidence(core);
    } else {
      canon = canonical_incidence(inc);
    }
    classes.emplace(std::move(canon), std::move(inc));
  }
};

}  // namespace

std::vector<Arrangement> search_nk(int n, int k, std::size_t limit, long long node_budget) {
  if (n < k * (k - 1) + 1)
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "need n >= k(k-1)+1");
  if (n > 60)
    throw ArrangementError(ArrangementError::Kind::BadParameter, "n > 60 unsupported");
  if (k < 2) return {};  // no valid arrangement has a point on fewer than 2 lines
  NkSearch s(n, k, limit, search_budget(node_budget));
  s.build_candidates();
  s.run();
  std::vector<Arrangement> out;
  out.reserve(s.classes.size());
  for (auto& [canon, inc] : s.classes) out.push_back(Arrangement::validate(inc));
  return out;
}

}  // namespace arrange
