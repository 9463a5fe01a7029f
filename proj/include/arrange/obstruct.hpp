#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrange/arrangement.hpp"
#include "arrange/blowup.hpp"
#include "arrange/cover.hpp"

namespace arrange {

// The blown-up point set does not interact with the branch lines in the way
// the covering argument needs: every intersection of two branch lines must be
// blown up, and no other blown point may lie on a branch line.
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A line outside the branch set meets a branch line away from every blown
// point, so its proper transform does not lift to disjoint spheres.
class BranchNotStrictlyEmbedded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Deletion count out of range for the host plane.
class InvalidDeletion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Signature data of a symmetric integer matrix.
struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
  bool operator==(const Inertia&) const = default;
};

using SymMatrix = std::vector<std::vector<long long>>;

// Exact inertia (numbers of positive, zero, and negative eigenvalues) of a
// symmetric integer matrix, via congruence diagonalization over the
// rationals.  Throws std::invalid_argument for a non-square or asymmetric
// input.
Inertia inertia(const SymMatrix& m);

// 64-bit FNV-1a hash of the incidence matrix (dimensions then row-major
// entries), as 16 hex digits.  A stable content id for reports; two hosts
// with the same line/point numbering hash equally across runs.
std::string incidence_hash(const Arrangement& a);

// One recorded inequality between a count of independent negative classes
// (needed) and the homology room available for them (available); the class
// count cannot exceed the room in any realization, so needed > available is
// a contradiction.
struct RouteComparison {
  std::string route;        // "total-b2" | "eigenspace" | "total-b2-minus"
  int r = -1;               // eigenspace index for the "eigenspace" route
  long long needed = 0;
  long long available = 0;
  bool fires = false;       // needed > available
  bool operator==(const RouteComparison&) const = default;
};

// Everything the obstruction pipeline computed, with the verdict and the
// first inequality that certifies it.  All entries are exact integers or
// rationals; re-evaluating any recorded route from its stored numbers
// reproduces its `fires` flag.
struct ObstructionReport {
  std::string arrangement_hash;      // incidence_hash of the host
  int p = 2;
  int alpha = 1;
  int beta = 1;
  SubArrangementEmbedding branch_embedding;  // two-pencil image in the host
  std::vector<int> blown_points;
  std::vector<int> outside_lines;    // host lines not in the branch image
  CoverInvariants cover;
  SymMatrix outside_form;            // intersection form of outside transforms
  SymMatrix eigen_form;              // p * outside_form (per-eigenspace Gram)
  int outside_rank = 0;
  Inertia outside_inertia;
  std::vector<long long> eigen_lower_bound;  // per r; 0 at r = 0
  std::vector<RouteComparison> routes;       // all comparisons, in precedence order
  bool obstructed = false;
  std::optional<RouteComparison> witness;    // first firing route
  bool corollary_nonfillable = false;        // == obstructed
  bool operator==(const ObstructionReport&) const = default;
};

// General obstruction pipeline.  branch embeds two_pencil(p, alpha, beta)
// into the host; blown_points is the set of blown-up host points.  Checks
// the embedding, the blow-up hypothesis (HypothesisViolation), and that
// outside proper transforms avoid the branch transforms
// (BranchNotStrictlyEmbedded), then compares three counts of independent
// negative classes against the cover's Betti numbers:
//   total-b2:        p * n-(M) + (branch lines)  vs  b2 of the cover,
//   eigenspace r:        n-(M)                   vs  b2_minus(r), r != 0,
//   total-b2-minus:  p * n-(M) + (branch lines)  vs  sum of b2_minus(r),
// where M is the outside intersection form and n- its negative index.
// Verdict is Obstructed when any comparison fires; the witness is the first
// firing one in the order above.
ObstructionReport obstruct_arrangement(const Arrangement& host, int p,
                                       int alpha, int beta,
                                       const SubArrangementEmbedding& branch,
                                       std::vector<int> blown_points);

// The projective-plane pipeline: builds the plane of order p, finds the
// first strict two-pencil(p, 1, 1) sub-arrangement, blows up all p^2+p+1
// points, and runs obstruct_arrangement.  Obstructed for every prime p.
ObstructionReport obstruct_projective_plane(int p);

// Deletion variant for odd primes: remove t of the p^2-p+1 lines disjoint
// from the fixed two-pencil in the plane of order p, still blowing up all
// p^2+p+1 original points.  Obstructed exactly when t < (p^2-3)/2.  Throws
// InvalidDeletion when t < 0 or t exceeds the number of removable lines.
ObstructionReport obstruct_deletion(int p, int t);

}  // namespace arrange
