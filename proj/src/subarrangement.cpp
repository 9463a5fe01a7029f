#include <algorithm>
#include <vector>

#include "arrange/arrangement.hpp"

namespace arrange {

namespace {

// Backtracking over injective assignments pattern line -> host line.  Every
// pattern point lies on at least two pattern lines, so once the line map is
// fixed the point images are forced: the image of a pattern point is the
// unique host point where its (mapped) lines meet.  The search checks, as
// lines are assigned, that all pattern points keep a consistent host image
// and that images stay pairwise distinct.
struct EmbedSearch {
  const Arrangement& host;
  const Arrangement& pattern;
  bool strict_only;
  std::size_t max_results;

  std::vector<int> line_map;             // pattern line -> host line (-1 unset)
  std::vector<int> point_img;            // pattern point -> host point (-1 unset)
  std::vector<int> point_img_count;      // how many assigned pattern lines witness it
  std::vector<std::uint8_t> host_line_used;
  std::vector<int> host_point_used;      // pattern point claiming it + 1, or 0
  std::vector<SubArrangementEmbedding> out;

  EmbedSearch(const Arrangement& h, const Arrangement& p, bool s, std::size_t m)
      : host(h), pattern(p), strict_only(s), max_results(m) {
    line_map.assign(pattern.lines(), -1);
    point_img.assign(pattern.points(), -1);
    point_img_count.assign(pattern.points(), 0);
    host_line_used.assign(host.lines(), 0);
    host_point_used.assign(host.points(), 0);
  }

  bool done() const { return max_results != 0 && out.size() >= max_results; }

  void run() {
    if (pattern.lines() > host.lines() || pattern.points() > host.points()) return;
    rec(0);
  }

  // Try to register pattern point q as mapping to host point hq.  Returns
  // false on conflict; records an undo entry otherwise.
  bool claim(int q, int hq, std::vector<int>& undo) {
    if (point_img[q] < 0) {
      if (host_point_used[hq]) return false;
      if (host.multiplicity(hq) < pattern.multiplicity(q)) return false;
      point_img[q] = hq;
      host_point_used[hq] = q + 1;
      point_img_count[q] = 1;
      undo.push_back(q);
      return true;
    }
    if (point_img[q] != hq) return false;
    ++point_img_count[q];
    undo.push_back(~q);  // bitwise-not marks a count-only increment
    return true;
  }

  void unclaim(const std::vector<int>& undo) {
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
      int q = *it;
      if (q >= 0) {
        host_point_used[point_img[q]] = 0;
        point_img[q] = -1;
        point_img_count[q] = 0;
      } else {
        --point_img_count[~q];
      }
    }
  }

  void rec(int pl) {
    if (done()) return;
    if (pl == pattern.lines()) {
      emit();
      return;
    }
    for (int hl = 0; hl < host.lines() && !done(); ++hl) {
      if (host_line_used[hl]) continue;
      if (host.points_on(hl).size() < pattern.points_on(pl).size()) continue;
      std::vector<int> undo;
      bool ok = true;
      for (int q : pattern.points_on(pl)) {
        // Find an already-assigned pattern line through q; the host images
        // must share a host point, which becomes (or confirms) q's image.
        int other = -1;
        for (int l2 : pattern.lines_through(q))
          if (l2 != pl && line_map[l2] >= 0) { other = l2; break; }
        if (other < 0) continue;  // image undetermined at this depth
        int hq = host.common_point(hl, line_map[other]);
        if (!claim(q, hq, undo)) { ok = false; break; }
      }
      if (ok) {
        line_map[pl] = hl;
        host_line_used[hl] = 1;
        rec(pl + 1);
        host_line_used[hl] = 0;
        line_map[pl] = -1;
      }
      unclaim(undo);
    }
  }

  void emit() {
    // All pattern points have images (each lies on >= 2 pattern lines, all
    // assigned).  Determine strictness: every host point on a mapped line
    // must be an image.
    bool strict = true;
    for (int pl = 0; pl < pattern.lines() && strict; ++pl)
      for (int hq : host.points_on(line_map[pl]))
        if (host_point_used[hq] == 0) { strict = false; break; }
    if (strict_only && !strict) return;
    SubArrangementEmbedding e;
    e.line_map = line_map;
    e.point_map = point_img;
    e.strict = strict;
    out.push_back(std::move(e));
  }
};

}  // namespace

std::vector<SubArrangementEmbedding> find_subarrangement(const Arrangement& host,
                                                         const Arrangement& pattern,
                                                         bool strict_only,
                                                         std::size_t max_results) {
  if (pattern.lines() == 0)
    throw ArrangementError(ArrangementError::Kind::BadParameter, "empty pattern");
  EmbedSearch s(host, pattern, strict_only, max_results);
  s.run();
  return std::move(s.out);
}

}  // namespace arrange
