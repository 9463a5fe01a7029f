#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

#include "arrange/arrangement.hpp"

namespace arrange {

// Exact rational scalar for feasibility certificates.
using BigRational = boost::multiprecision::cpp_rational;

// The strict system Qz > 0, z > 0 has no solution.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Intersection matrix of the plumbing graph whose vertices are the lines of
// an arrangement plus one exceptional sphere per point of multiplicity >= 3:
//
//   Q = [[B, A], [A^T, -I_N]]
//
// with A the line/multi-point incidence, B's diagonal 1 - n_j (n_j = number
// of multi-points on line j) and off-diagonal 1 - delta_ij (delta_ij = 1
// exactly when lines i and j meet in a multi-point).
struct PlumbingMatrix {
  int k = 0;                     // line vertices
  int N = 0;                     // multi-point vertices
  std::vector<int> multi_points; // arrangement point index per vertex, ascending
  std::vector<std::vector<long long>> q;  // (k+N) x (k+N), symmetric
  bool operator==(const PlumbingMatrix&) const = default;
};

PlumbingMatrix plumbing_matrix(const Arrangement& arr);

// Qz at the all-ones vector, split into the line and point blocks.
// For every arrangement the line coordinate equals 1 + (number of lines
// meeting this line in a double point) and the point coordinate equals the
// point's multiplicity minus 1, so positivity always holds.
struct GsAllOnes {
  std::vector<long long> line_coords;
  std::vector<long long> point_coords;
  bool positive = false;
  bool operator==(const GsAllOnes&) const = default;
};

GsAllOnes gs_all_ones(const PlumbingMatrix& pm);

// A strictly positive rational z with Qz strictly positive, for an arbitrary
// symmetric integer matrix.  Tries the all-ones vector first, then exact
// Fourier-Motzkin elimination.  Throws Infeasible when no such z exists,
// std::invalid_argument for non-symmetric input, and SearchSpaceTooLarge
// beyond 40 variables (where only the all-ones shortcut is attempted).
std::vector<BigRational> positive_vector(
    const std::vector<std::vector<long long>>& q);

// positive_vector applied to a plumbing matrix; the all-ones certificate
// always succeeds for matrices built by plumbing_matrix.
std::vector<BigRational> gs_criterion(const PlumbingMatrix& pm);

}  // namespace arrange
