#pragma once

// Shared test fixtures and small helpers.

#include <vector>

#include "arrange/arrangement.hpp"
#include "arrange/fp.hpp"

namespace fixtures {

// Standard labeling of the 7-line/7-point plane used across the test suite;
// entry i is line L(i+1) as the set of 1-based point labels.
inline const std::vector<std::vector<int>> kPlane7 = {
    {1, 5, 6}, {1, 4, 7}, {1, 2, 3}, {2, 4, 6}, {3, 4, 5}, {2, 5, 7}, {3, 6, 7}};

inline arrange::IncidenceMatrix lines_to_incidence(
    const std::vector<std::vector<int>>& lines, int points) {
  arrange::IncidenceMatrix inc(lines.size(),
                               std::vector<std::uint8_t>(points, 0));
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (int q : lines[i]) inc[i][q - 1] = 1;
  return inc;
}

inline arrange::Arrangement plane7() {
  return arrange::Arrangement::validate(lines_to_incidence(kPlane7, 7));
}

inline arrange::FpMatrix incidence_fp(const arrange::Arrangement& a, int modulus) {
  std::vector<arrange::FpVector> rows;
  for (int i = 0; i < a.lines(); ++i) {
    arrange::FpVector r(a.points(), 0);
    for (int q : a.points_on(i)) r[q] = 1;
    rows.push_back(r);
  }
  return arrange::FpMatrix::from_rows(modulus, rows);
}

}  // namespace fixtures
