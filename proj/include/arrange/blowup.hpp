#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "arrange/arrangement.hpp"
#include "arrange/fp.hpp"

namespace arrange {

// Intersection of homology classes attached to different blow-up models.
class ModelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coefficient vector whose length disagrees with the model it is tested in.
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integer second-homology class of the plane blown up at N points, written in
// the basis (h, e_1, ..., e_N): coeff[0] is the coefficient of the hyperplane
// class h and coeff[1 + j] the coefficient of the exceptional class e_{j+1}.
struct H2Class {
  std::vector<long long> coeff;
  bool operator==(const H2Class&) const = default;
};

// Homology model of the projective plane blown up along a chosen subset of
// the points of an arrangement.  blown_points is an ordered list of distinct
// point indices; exceptional class e_{j+1} sits over blown_points()[j].
// Immutable after construction and safe to share across threads.
class BlowupModel {
 public:
  // Throws ArrangementError (IndexOutOfRange / BadParameter) when an index is
  // out of range or repeated.
  BlowupModel(Arrangement arrangement, std::vector<int> blown_points);

  const Arrangement& arrangement() const { return arr_; }
  const std::vector<int>& blown_points() const { return blown_; }
  int num_blown() const { return static_cast<int>(blown_.size()); }
  // Dimension of the modelled H_2: 1 + number of blown points.
  int rank() const { return 1 + num_blown(); }
  // "h", "e1", "e2", ... in basis order.
  std::vector<std::string> basis_labels() const;

 private:
  Arrangement arr_;
  std::vector<int> blown_;
};

// Class of the proper transform of each line: h minus the exceptional class
// of every blown point lying on the line.  One entry per line, in line order.
std::vector<H2Class> proper_transforms(const BlowupModel& model);

// Intersection pairing a0*b0 - sum_{j>=1} a_j*b_j (h^2 = +1, e_j^2 = -1,
// mixed products 0).  Throws ModelMismatch when the classes live in models of
// different rank.
long long intersection_number(const H2Class& a, const H2Class& b);

// Basis of the code of coefficient tuples (a_1, ..., a_L) over Z/d for which
// sum_i a_i * [proper transform of line i] = 0 in H_2 with Z/d coefficients:
// equivalently the left kernel of the L x (1 + N) matrix whose first column
// is all ones and whose remaining columns are the incidence columns of the
// blown points.  Negative coefficients are stored as canonical residues
// (d - 1 for -1).  Throws CompositeModulusError when d is not prime.
std::vector<FpVector> relation_code(const BlowupModel& model, int d);

// True iff sum_i a[i] * [proper transform of line i] vanishes componentwise
// mod d.  Throws LengthMismatch unless a has exactly one entry per line, and
// CompositeModulusError when d is not prime.
bool verify_relation(const BlowupModel& model, const FpVector& a, int d);

}  // namespace arrange
