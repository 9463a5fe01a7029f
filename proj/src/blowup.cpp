#include "arrange/blowup.hpp"

#include <utility>

namespace arrange {

BlowupModel::BlowupModel(Arrangement arrangement, std::vector<int> blown_points)
    : arr_(std::move(arrangement)), blown_(std::move(blown_points)) {
  std::vector<char> seen(static_cast<std::size_t>(arr_.points()), 0);
  for (int p : blown_) {
    if (p < 0 || p >= arr_.points()) {
      throw ArrangementError(ArrangementError::Kind::IndexOutOfRange,
                             "blown point index " + std::to_string(p) +
                                 " out of range",
                             -1, p);
    }
    if (seen[static_cast<std::size_t>(p)]) {
      throw ArrangementError(ArrangementError::Kind::BadParameter,
                             "blown point " + std::to_string(p) + " repeated",
                             -1, p);
    }
    seen[static_cast<std::size_t>(p)] = 1;
  }
}

std::vector<std::string> BlowupModel::basis_labels() const {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(rank()));
  labels.push_back("h");
  for (int j = 1; j <= num_blown(); ++j) labels.push_back("e" + std::to_string(j));
  return labels;
}

std::vector<H2Class> proper_transforms(const BlowupModel& model) {
  const Arrangement& arr = model.arrangement();
  const std::vector<int>& blown = model.blown_points();
  std::vector<H2Class> out;
  out.reserve(static_cast<std::size_t>(arr.lines()));
  for (int i = 0; i < arr.lines(); ++i) {
    H2Class c;
    c.coeff.assign(static_cast<std::size_t>(model.rank()), 0);
    c.coeff[0] = 1;
    for (std::size_t j = 0; j < blown.size(); ++j) {
      if (arr.incident(i, blown[j])) c.coeff[j + 1] = -1;
    }
    out.push_back(std::move(c));
  }
  return out;
}

long long intersection_number(const H2Class& a, const H2Class& b) {
  if (a.coeff.size() != b.coeff.size() || a.coeff.empty()) {
    throw ModelMismatch("intersection of classes from models of rank " +
                        std::to_string(a.coeff.size()) + " and " +
                        std::to_string(b.coeff.size()));
  }
  long long s = a.coeff[0] * b.coeff[0];
  for (std::size_t j = 1; j < a.coeff.size(); ++j) s -= a.coeff[j] * b.coeff[j];
  return s;
}

std::vector<FpVector> relation_code(const BlowupModel& model, int d) {
  if (!is_prime(d)) throw CompositeModulusError(d);
  const Arrangement& arr = model.arrangement();
  const std::vector<int>& blown = model.blown_points();
  FpMatrix m = FpMatrix::zero(d, arr.lines(), model.rank());
  for (int i = 0; i < arr.lines(); ++i) {
    m.at(i, 0) = 1;
    for (std::size_t j = 0; j < blown.size(); ++j) {
      m.at(i, static_cast<int>(j) + 1) = arr.incident(i, blown[j]) ? 1 : 0;
    }
  }
  return kernel_basis(m).row_vectors();
}

bool verify_relation(const BlowupModel& model, const FpVector& a, int d) {
  const Arrangement& arr = model.arrangement();
  if (static_cast<int>(a.size()) != arr.lines()) {
    throw LengthMismatch("relation has " + std::to_string(a.size()) +
                         " coefficients for " + std::to_string(arr.lines()) +
                         " lines");
  }
  if (!is_prime(d)) throw CompositeModulusError(d);
  const std::vector<int>& blown = model.blown_points();
  // Coefficient of h, then (up to sign) of each exceptional class.
  long long h = 0;
  for (int x : a) h += x;
  if (((h % d) + d) % d != 0) return false;
  for (int bp : blown) {
    long long s = 0;
    for (int i = 0; i < arr.lines(); ++i) {
      if (arr.incident(i, bp)) s += a[static_cast<std::size_t>(i)];
    }
    if (((s % d) + d) % d != 0) return false;
  }
  return true;
}

}  // namespace arrange
