#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "arrange/arrangement.hpp"

namespace arrange {

using Rational = boost::rational<long long>;

// A Betti-number formula evaluated to a negative value: the requested cyclic
// branched cover cannot exist with these parameters.  Surfaced to the caller
// rather than clamped.
class NegativeBetti : public std::runtime_error {
 public:
  NegativeBetti(int r, long long value)
      : std::runtime_error("eigenspace r=" + std::to_string(r) +
                           " has negative second Betti contribution " +
                           std::to_string(value)),
        r(r),
        value(value) {}
  int r;
  long long value;
};

// Closed-form invariants of a degree-d cyclic branched cover, resolved into
// the d eigenspaces of the deck transformation acting on second homology.
// Index r runs over [0, d); the r = 0 entries are the invariants of the base.
struct CoverInvariants {
  int d = 1;
  std::vector<long long> b2_plus;    // per eigenspace, positive-definite part
  std::vector<long long> b2_minus;   // per eigenspace, negative-definite part
  std::vector<long long> b2;         // b2_plus[r] + b2_minus[r]
  std::vector<Rational> epsilon;     // b2_plus[r] - b2_minus[r], kept exact
  long long chi_total = 0;           // Euler characteristic of the cover
  long long b1 = 0;                  // first Betti number of the cover
  bool operator==(const CoverInvariants&) const = default;
};

// Euler characteristic of a degree-d cyclic cover branched over num_branch
// disjoint spheres: d * (chi_base - 2 * num_branch) + 2 * num_branch.
// Requires d >= 1 and num_branch >= 0 (throws ArrangementError otherwise);
// d = 1 returns chi_base.
long long branched_euler(long long chi_base, int d, long long num_branch);

// Signature of the r-th eigenspace of a degree-d cyclic branched cover whose
// branch locus has total self-intersection f_square:
//   sign_base - (2 r (d - r) / d^2) * f_square,
// returned as an exact rational.  Requires d >= 1 and 0 <= r < d (throws
// ArrangementError otherwise).  r = 0 or f_square = 0 return sign_base.
Rational casson_gordon_epsilon(long long sign_base, int d, int r,
                               long long f_square);

// Invariants of the degree-p cover of the plane blown up at num_blowups
// points, branched over the proper transforms of the lines of the two-pencil
// arrangement two_pencil(p, alpha, beta), assuming every intersection point
// of those lines is among the blown-up points:
//   chi_total        = p * (3 + N - 2p(alpha+beta)) + 2p(alpha+beta)
//   b1               = 0
//   b2_plus[r], r>0  = 2 + 2 alpha beta r (p - r) - p (alpha + beta)
//   b2_minus[r], r>0 = 1 + N - 2 alpha beta r (p - r) - p (alpha + beta)
//   b2_plus[0] = 1,  b2_minus[0] = N          (N = num_blowups)
// Throws ArrangementError for p not prime, alpha or beta < 1, or
// num_blowups smaller than the 2 + p^2 alpha beta arrangement points, and
// NegativeBetti when a formula evaluates negative.
CoverInvariants two_pencil_cover_invariants(int p, int alpha, int beta,
                                            long long num_blowups);

}  // namespace arrange
