#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrange/errors.hpp"

namespace arrange {

// Validation / construction failure for combinatorial line arrangements.
class ArrangementError : public std::invalid_argument {
 public:
  enum class Kind {
    PairWithoutPoint,        // lines i, j share no point
    PairWithMultiplePoints,  // lines i, j share points k and l
    IsolatedOrDuplicatePoint,  // point j has multiplicity < 2 or duplicates another column
    IndexOutOfRange,
    NotPrime,      // generator parameter p is not prime
    BadParameter,  // other generator / search parameter violation
  };

  ArrangementError(Kind kind, const std::string& what, int i = -1, int j = -1,
                   int k = -1, int l = -1)
      : std::invalid_argument(what), kind(kind), i(i), j(j), k(k), l(l) {}

  Kind kind;
  int i, j, k, l;
};

using IncidenceMatrix = std::vector<std::vector<std::uint8_t>>;  // lines x points, 0/1

// A combinatorial line arrangement: a 0/1 incidence matrix (rows = lines,
// columns = points) in which every pair of distinct lines shares exactly one
// point, every point lies on at least two lines, and no two points lie on
// the same set of lines.  Instances are immutable once constructed; the only
// way to obtain one is through validate() or one of the generators below.
class Arrangement {
 public:
  // Checks the three axioms and builds the cached indexes.  Throws
  // ArrangementError identifying the first violation found (line pairs are
  // scanned in lexicographic order, then point columns left to right).
  static Arrangement validate(IncidenceMatrix incidence);

  int lines() const { return static_cast<int>(inc_.size()); }
  int points() const { return inc_.empty() ? 0 : static_cast<int>(inc_.front().size()); }
  bool incident(int line, int point) const { return inc_[line][point] != 0; }
  const IncidenceMatrix& incidence() const { return inc_; }

  // Number of lines through the point.  Throws IndexOutOfRange.
  int multiplicity(int point) const;

  // The unique point shared by two distinct lines.
  int common_point(int line_a, int line_b) const;

  const std::vector<int>& lines_through(int point) const;
  const std::vector<int>& points_on(int line) const;

 private:
  Arrangement() = default;
  IncidenceMatrix inc_;
  std::vector<std::vector<int>> pt_lines_;   // per point
  std::vector<std::vector<int>> line_pts_;   // per line
  std::vector<std::vector<int>> meet_;       // line x line -> shared point
};

// The finite projective plane of prime order p: p^2 + p + 1 lines and
// points, every point of multiplicity p + 1.  Points are the projective
// triples (1, x, y), (0, 1, y), (0, 0, 1) in that order; line (a, b, c)
// contains point (x, y, z) iff ax + by + cz = 0 (mod p).  Throws NotPrime.
Arrangement projective_plane(int p);

// Two pencils: p*alpha lines through a point P1 (indices 0..p*alpha-1,
// point 0) and p*beta lines through P2 (point 1), all cross pairs meeting in
// distinct double points.  Point 2 + i*p*beta + j is the crossing of line i
// of the first pencil with line j of the second.  Requires p >= 2,
// alpha, beta >= 1; throws BadParameter otherwise.
Arrangement two_pencil(int p, int alpha, int beta);

// Lexicographically minimal incidence matrix over simultaneous row and
// column permutations, flattened row-major.  Two 0/1 matrices are
// row/column-permutation equivalent iff their canonical forms are equal.
std::vector<std::uint8_t> canonical_incidence(const IncidenceMatrix& m);

bool isomorphic(const Arrangement& a, const Arrangement& b);

// The sub-arrangement induced by a subset of lines: keeps the points lying
// on at least two of the chosen lines.  Point k of the result corresponds to
// point point_ids()[k]... returned alongside for traceability.
struct InducedSubArrangement {
  Arrangement arrangement;
  std::vector<int> line_ids;   // host line per result line
  std::vector<int> point_ids;  // host point per result point
};
InducedSubArrangement restrict_to_lines(const Arrangement& host, std::vector<int> lines);

// An incidence-preserving embedding of pattern into host.  line_map[i] is
// the host line for pattern line i; point_map is determined by line_map
// (every pattern point lies on >= 2 pattern lines, whose host images meet in
// one point) and is injective.  strict records whether every host point on a
// mapped line is the image of a pattern point.
struct SubArrangementEmbedding {
  std::vector<int> line_map;
  std::vector<int> point_map;
  bool strict = false;
  bool operator==(const SubArrangementEmbedding&) const = default;
};

// All embeddings of pattern into host, ordered lexicographically by
// line_map.  With strict_only, only strict embeddings are returned.
// max_results = 0 means unlimited.
std::vector<SubArrangementEmbedding> find_subarrangement(const Arrangement& host,
                                                         const Arrangement& pattern,
                                                         bool strict_only,
                                                         std::size_t max_results = 0);

// Witness that an arrangement is an (n_k) configuration: n distinguished
// points, each of multiplicity exactly k, with every line containing exactly
// k of them.  Requires n >= k(k-1)+1.
struct NkCertificate {
  int n = 0;
  int k = 0;
  std::vector<int> distinguished;  // increasing point ids
};

// First certificate in lexicographic order, or nullopt when none exists.
std::optional<NkCertificate> nk_certificate(const Arrangement& a, int n, int k);

// Exhaustive search for (n_k) configurations up to isomorphism.  Each result
// is a full arrangement: the n x n distinguished incidence completed with
// one double point per line pair that does not meet in a distinguished
// point (double point columns appear after the n distinguished columns,
// ordered by their line pair).  Stops after `limit` pairwise non-isomorphic
// results (limit = 0: find all).  node_budget = 0 uses ARRANGE_SEARCH_CAP or
// a built-in default; exceeding it throws SearchSpaceTooLarge.
std::vector<Arrangement> search_nk(int n, int k, std::size_t limit = 0,
                                   long long node_budget = 0);

}  // namespace arrange
