#include "arrange/arrangement.hpp"

#include <algorithm>

#include "arrange/fp.hpp"

namespace arrange {

Arrangement Arrangement::validate(IncidenceMatrix incidence) {
  const int L = static_cast<int>(incidence.size());
  const int P = incidence.empty() ? 0 : static_cast<int>(incidence.front().size());
  for (const auto& row : incidence)
    if (static_cast<int>(row.size()) != P)
      throw ArrangementError(ArrangementError::Kind::BadParameter, "ragged incidence matrix");
  for (auto& row : incidence)
    for (auto& v : row)
      if (v > 1)
        throw ArrangementError(ArrangementError::Kind::BadParameter,
                               "incidence entries must be 0 or 1");

  // Axiom 1: every pair of lines shares exactly one point.
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      int first = -1, second = -1;
      for (int q = 0; q < P; ++q) {
        if (incidence[i][q] && incidence[j][q]) {
          if (first < 0)
            first = q;
          else {
            second = q;
            break;
          }
        }
      }
      if (first < 0)
        throw ArrangementError(ArrangementError::Kind::PairWithoutPoint,
                               "lines " + std::to_string(i) + " and " + std::to_string(j) +
                                   " share no point",
                               i, j);
      if (second >= 0)
        throw ArrangementError(ArrangementError::Kind::PairWithMultiplePoints,
                               "lines " + std::to_string(i) + " and " + std::to_string(j) +
                                   " share points " + std::to_string(first) + " and " +
                                   std::to_string(second),
                               i, j, first, second);
    }
  }

  // Axiom 2 and 3: multiplicity >= 2, no duplicate columns.
  for (int q = 0; q < P; ++q) {
    int mult = 0;
    for (int i = 0; i < L; ++i) mult += incidence[i][q];
    if (mult < 2)
      throw ArrangementError(ArrangementError::Kind::IsolatedOrDuplicatePoint,
                             "point " + std::to_string(q) + " has multiplicity " +
                                 std::to_string(mult),
                             -1, q);
  }
  for (int q = 0; q < P; ++q) {
    for (int q2 = q + 1; q2 < P; ++q2) {
      bool same = true;
      for (int i = 0; i < L && same; ++i) same = incidence[i][q] == incidence[i][q2];
      if (same)
        throw ArrangementError(ArrangementError::Kind::IsolatedOrDuplicatePoint,
                               "points " + std::to_string(q) + " and " + std::to_string(q2) +
                                   " lie on the same lines",
                               -1, q2);
    }
  }

  Arrangement a;
  a.inc_ = std::move(incidence);
  a.pt_lines_.assign(P, {});
  a.line_pts_.assign(L, {});
  for (int i = 0; i < L; ++i)
    for (int q = 0; q < P; ++q)
      if (a.inc_[i][q]) {
        a.pt_lines_[q].push_back(i);
        a.line_pts_[i].push_back(q);
      }
  a.meet_.assign(L, std::vector<int>(L, -1));
  for (int q = 0; q < P; ++q)
    for (std::size_t x = 0; x < a.pt_lines_[q].size(); ++x)
      for (std::size_t y = x + 1; y < a.pt_lines_[q].size(); ++y) {
        int i = a.pt_lines_[q][x], j = a.pt_lines_[q][y];
        a.meet_[i][j] = a.meet_[j][i] = q;
      }
  return a;
}

int Arrangement::multiplicity(int point) const {
  if (point < 0 || point >= points())
    throw ArrangementError(ArrangementError::Kind::IndexOutOfRange,
                           "point index " + std::to_string(point) + " out of range", -1, point);
  return static_cast<int>(pt_lines_[point].size());
}

int Arrangement::common_point(int line_a, int line_b) const {
  if (line_a < 0 || line_a >= lines() || line_b < 0 || line_b >= lines() || line_a == line_b)
    throw ArrangementError(ArrangementError::Kind::IndexOutOfRange,
                           "bad line pair (" + std::to_string(line_a) + ", " +
                               std::to_string(line_b) + ")",
                           line_a, line_b);
  return meet_[line_a][line_b];
}

const std::vector<int>& Arrangement::lines_through(int point) const {
  if (point < 0 || point >= points())
    throw ArrangementError(ArrangementError::Kind::IndexOutOfRange,
                           "point index " + std::to_string(point) + " out of range", -1, point);
  return pt_lines_[point];
}

const std::vector<int>& Arrangement::points_on(int line) const {
  if (line < 0 || line >= lines())
    throw ArrangementError(ArrangementError::Kind::IndexOutOfRange,
                           "line index " + std::to_string(line) + " out of range", line);
  return line_pts_[line];
}

Arrangement projective_plane(int p) {
  if (!is_prime(p)) throw ArrangementError(ArrangementError::Kind::NotPrime,
                                           "p = " + std::to_string(p) + " is not prime");
  struct Triple { int x, y, z; };
  std::vector<Triple> pts;
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) pts.push_back({1, x, y});
  for (int y = 0; y < p; ++y) pts.push_back({0, 1, y});
  pts.push_back({0, 0, 1});
  const int n = static_cast<int>(pts.size());
  IncidenceMatrix inc(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = pts[i].x * pts[j].x + pts[i].y * pts[j].y + pts[i].z * pts[j].z;
      inc[i][j] = (v % p == 0) ? 1 : 0;
    }
  return Arrangement::validate(std::move(inc));
}

Arrangement two_pencil(int p, int alpha, int beta) {
  if (p < 2)
    throw ArrangementError(ArrangementError::Kind::BadParameter, "p must be >= 2");
  if (alpha < 1 || beta < 1)
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "alpha and beta must be >= 1");
  const int a = p * alpha, b = p * beta;
  const int L = a + b;
  const int P = 2 + a * b;
  IncidenceMatrix inc(L, std::vector<std::uint8_t>(P, 0));
  for (int i = 0; i < a; ++i) inc[i][0] = 1;
  for (int j = 0; j < b; ++j) inc[a + j][1] = 1;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      int q = 2 + i * b + j;
      inc[i][q] = 1;
      inc[a + j][q] = 1;
    }
  return Arrangement::validate(std::move(inc));
}

bool isomorphic(const Arrangement& a, const Arrangement& b) {
  if (a.lines() != b.lines() || a.points() != b.points()) return false;
  return canonical_incidence(a.incidence()) == canonical_incidence(b.incidence());
}

InducedSubArrangement restrict_to_lines(const Arrangement& host, std::vector<int> lines) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  for (int l : lines)
    if (l < 0 || l >= host.lines())
      throw ArrangementError(ArrangementError::Kind::IndexOutOfRange,
                             "line index " + std::to_string(l) + " out of range", l);
  std::vector<int> point_ids;
  for (int q = 0; q < host.points(); ++q) {
    int mult = 0;
    for (int l : lines) mult += host.incident(l, q) ? 1 : 0;
    if (mult >= 2) point_ids.push_back(q);
  }
  IncidenceMatrix inc(lines.size(), std::vector<std::uint8_t>(point_ids.size(), 0));
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < point_ids.size(); ++j)
      inc[i][j] = host.incident(lines[i], point_ids[j]) ? 1 : 0;
  InducedSubArrangement out{Arrangement::validate(std::move(inc)), std::move(lines),
                            std::move(point_ids)};
  return out;
}

}  // namespace arrange
