#include "arrange/plumbing.hpp"

#include <algorithm>
#include <set>

#include "arrange/errors.hpp"

namespace arrange {

PlumbingMatrix plumbing_matrix(const Arrangement& arr) {
  const int k = arr.lines();
  PlumbingMatrix pm;
  pm.k = k;
  for (int p = 0; p < arr.points(); ++p)
    if (arr.multiplicity(p) >= 3) pm.multi_points.push_back(p);
  pm.N = static_cast<int>(pm.multi_points.size());
  const int m = k + pm.N;
  pm.q.assign(m, std::vector<long long>(m, 0));

  std::vector<int> is_multi(arr.points(), 0);
  for (int p : pm.multi_points) is_multi[p] = 1;

  for (int i = 0; i < k; ++i) {
    int ni = 0;
    for (int p : arr.points_on(i)) ni += is_multi[p];
    pm.q[i][i] = 1 - ni;
    for (int j = i + 1; j < k; ++j) {
      int delta = is_multi[arr.common_point(i, j)];
      pm.q[i][j] = pm.q[j][i] = 1 - delta;
    }
  }
  for (int p = 0; p < pm.N; ++p) {
    pm.q[k + p][k + p] = -1;
    for (int i = 0; i < k; ++i)
      if (arr.incident(i, pm.multi_points[p])) pm.q[i][k + p] = pm.q[k + p][i] = 1;
  }
  return pm;
}

GsAllOnes gs_all_ones(const PlumbingMatrix& pm) {
  GsAllOnes out;
  const int m = pm.k + pm.N;
  out.positive = true;
  for (int i = 0; i < m; ++i) {
    long long s = 0;
    for (int j = 0; j < m; ++j) s += pm.q[i][j];
    (i < pm.k ? out.line_coords : out.point_coords).push_back(s);
    if (s <= 0) out.positive = false;
  }
  return out;
}

namespace {

using Row = std::vector<BigRational>;

// True for rows implied by positivity of every variable (all coefficients
// >= 0, at least one > 0); dropping them is sound because the final z is
// strictly positive.
bool implied_by_positivity(const Row& r) {
  bool any = false;
  for (const BigRational& c : r) {
    if (c < 0) return false;
    if (c > 0) any = true;
  }
  return any;
}

void normalize(Row& r) {
  for (const BigRational& c : r)
    if (c != 0) {
      BigRational s = abs(c);
      for (BigRational& x : r) x /= s;
      return;
    }
}

}  // namespace

std::vector<BigRational> positive_vector(
    const std::vector<std::vector<long long>>& q) {
  const int m = static_cast<int>(q.size());
  for (const auto& row : q)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("matrix must be square");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (q[i][j] != q[j][i])
        throw std::invalid_argument("matrix must be symmetric");
  if (m == 0) return {};

  // The all-ones certificate first.
  bool ones_ok = true;
  for (int i = 0; i < m && ones_ok; ++i) {
    long long s = 0;
    for (int j = 0; j < m; ++j) s += q[i][j];
    ones_ok = s > 0;
  }
  if (ones_ok) return std::vector<BigRational>(m, 1);

  if (m > 40) throw SearchSpaceTooLarge(m, 40);

  // Strict homogeneous system: z_i > 0 and (Qz)_i > 0, solved by
  // Fourier-Motzkin elimination from the last variable down.  The z_v > 0
  // rows touch one variable each, so they are injected as an extra lower
  // bound at their own elimination level instead of carried along.
  std::vector<Row> rows;
  for (int i = 0; i < m; ++i) {
    Row r(m);
    for (int j = 0; j < m; ++j) r[j] = q[i][j];
    if (std::all_of(r.begin(), r.end(),
                    [](const BigRational& c) { return c == 0; }))
      throw Infeasible("the strict system Qz > 0, z > 0 is infeasible");
    rows.push_back(std::move(r));
  }

  const std::size_t kRowCap = 100000;
  // Per eliminated variable: the bounding linear forms in the earlier
  // variables (z_v > L(z) for each lower, z_v < U(z) for each upper).
  std::vector<std::vector<Row>> lowers(m), uppers(m);
  for (int v = m - 1; v >= 0; --v) {
    std::vector<Row> keep;
    for (Row& r : rows) {
      if (r[v] == 0) {
        keep.push_back(std::move(r));
        continue;
      }
      Row form(v);  // z_v (> or <) sum_j form[j] z_j
      for (int j = 0; j < v; ++j) form[j] = -r[j] / r[v];
      (r[v] > 0 ? lowers[v] : uppers[v]).push_back(std::move(form));
    }
    lowers[v].emplace_back(v, 0);  // z_v > 0
    std::set<Row> next;
    for (const Row& lo : lowers[v])
      for (const Row& hi : uppers[v]) {
        Row r(m, 0);  // U(z) - L(z) > 0
        for (int j = 0; j < v; ++j) r[j] = hi[j] - lo[j];
        bool all_zero = std::all_of(r.begin(), r.end(),
                                    [](const BigRational& c) { return c == 0; });
        if (all_zero) throw Infeasible("the strict system Qz > 0, z > 0 is infeasible");
        if (implied_by_positivity(r)) continue;
        normalize(r);
        next.insert(std::move(r));
      }
    for (Row& r : keep) {
      if (implied_by_positivity(r)) continue;
      normalize(r);
      next.insert(std::move(r));
    }
    rows.assign(next.begin(), next.end());
    if (rows.size() > kRowCap)
      throw SearchSpaceTooLarge(static_cast<long long>(rows.size()),
                                static_cast<long long>(kRowCap));
  }

  // Back-substitution: every variable has the z_v > 0 row among its lower
  // bounds, so lowers[v] is never empty and midpoints stay positive.
  std::vector<BigRational> z(m, 0);
  for (int v = 0; v < m; ++v) {
    auto eval = [&](const Row& form) {
      BigRational s = 0;
      for (int j = 0; j < v; ++j) s += form[j] * z[j];
      return s;
    };
    BigRational lo = eval(lowers[v].front());
    for (const Row& form : lowers[v]) lo = std::max(lo, eval(form));
    if (uppers[v].empty()) {
      z[v] = lo + 1;
    } else {
      BigRational hi = eval(uppers[v].front());
      for (const Row& form : uppers[v]) hi = std::min(hi, eval(form));
      z[v] = (lo + hi) / 2;
    }
  }

  for (int i = 0; i < m; ++i) {
    BigRational s = 0;
    for (int j = 0; j < m; ++j) s += BigRational(q[i][j]) * z[j];
    if (!(z[i] > 0) || !(s > 0))
      throw std::logic_error("feasibility back-substitution failed");
  }
  return z;
}

std::vector<BigRational> gs_criterion(const PlumbingMatrix& pm) {
  return positive_vector(pm.q);
}

}  // namespace arrange
