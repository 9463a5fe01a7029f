#include "arrange/obstruct.hpp"

#include <cstdio>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace arrange {

namespace {

using BigRat = boost::multiprecision::cpp_rational;

}  // namespace

Inertia inertia(const SymMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("inertia needs a square matrix");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw std::invalid_argument("inertia needs a symmetric matrix");
  if (n == 0) return {};

  // Strict diagonal dominance pins every eigenvalue's sign (Gershgorin).
  bool all_neg = true, all_pos = true;
  for (int i = 0; i < n && (all_neg || all_pos); ++i) {
    long long off = 0;
    for (int j = 0; j < n; ++j)
      if (j != i)
        off += std::llabs(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    const long long d = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (!(d < 0 && -d > off)) all_neg = false;
    if (!(d > 0 && d > off)) all_pos = false;
  }
  if (all_neg) return {0, 0, n};
  if (all_pos) return {n, 0, 0};

  // Congruence diagonalization over the rationals (Sylvester's law).
  std::vector<std::vector<BigRat>> a(
      static_cast<std::size_t>(n), std::vector<BigRat>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

  Inertia out;
  for (int k = 0; k < n; ++k) {
    auto& ak = a[static_cast<std::size_t>(k)];
    if (ak[static_cast<std::size_t>(k)] == 0) {
      int sw = -1;
      for (int j = k + 1; j < n; ++j)
        if (a[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] != 0) {
          sw = j;
          break;
        }
      if (sw >= 0) {
        std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(sw)]);
        for (int i = 0; i < n; ++i)
          std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(sw)]);
      } else {
        int off = -1;
        for (int j = k + 1; j < n; ++j)
          if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] != 0) {
            off = j;
            break;
          }
        if (off < 0) {
          ++out.n_zero;  // the whole remaining row/column vanishes
          continue;
        }
        // Add row and column `off` to row and column k: the diagonal entry
        // becomes 2 * a[k][off] != 0 while the congruence class is kept.
        for (int j = 0; j < n; ++j)
          a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] +=
              a[static_cast<std::size_t>(off)][static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i)
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
              a[static_cast<std::size_t>(i)][static_cast<std::size_t>(off)];
      }
    }
    const BigRat piv = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    if (piv > 0)
      ++out.n_plus;
    else
      ++out.n_minus;
    for (int i = k + 1; i < n; ++i) {
      auto& ai = a[static_cast<std::size_t>(i)];
      if (ai[static_cast<std::size_t>(k)] == 0) continue;
      const BigRat f = ai[static_cast<std::size_t>(k)] / piv;
      for (int j = k; j < n; ++j)
        ai[static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }
  }
  return out;
}

std::string incidence_hash(const Arrangement& a) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte & 0xffULL;
    h *= 1099511628211ULL;
  };
  auto mix32 = [&mix](std::uint32_t v) {
    for (int s = 0; s < 32; s += 8) mix(v >> s);
  };
  mix32(static_cast<std::uint32_t>(a.lines()));
  mix32(static_cast<std::uint32_t>(a.points()));
  for (const auto& row : a.incidence())
    for (std::uint8_t bit : row) mix(bit);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Point images forced by line_map, with full validation: distinct host
// lines, injective point images, and exact incidence preservation.
std::vector<int> embedded_point_map(const Arrangement& host,
                                    const Arrangement& pattern,
                                    const std::vector<int>& line_map) {
  if (static_cast<int>(line_map.size()) != pattern.lines()) {
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "branch embedding must map all " +
                               std::to_string(pattern.lines()) +
                               " two-pencil lines");
  }
  std::vector<char> used(static_cast<std::size_t>(host.lines()), 0);
  for (int h : line_map) {
    if (h < 0 || h >= host.lines())
      throw ArrangementError(ArrangementError::Kind::IndexOutOfRange,
                             "branch line index out of range", -1, h);
    if (used[static_cast<std::size_t>(h)])
      throw ArrangementError(ArrangementError::Kind::BadParameter,
                             "branch line mapped twice", -1, h);
    used[static_cast<std::size_t>(h)] = 1;
  }
  std::vector<int> pm(static_cast<std::size_t>(pattern.points()), -1);
  std::vector<char> claimed(static_cast<std::size_t>(host.points()), 0);
  for (int k = 0; k < pattern.points(); ++k) {
    const auto& thr = pattern.lines_through(k);
    const int q = host.common_point(line_map[static_cast<std::size_t>(thr[0])],
                                    line_map[static_cast<std::size_t>(thr[1])]);
    if (claimed[static_cast<std::size_t>(q)])
      throw ArrangementError(ArrangementError::Kind::BadParameter,
                             "branch point images collide", -1, q);
    claimed[static_cast<std::size_t>(q)] = 1;
    pm[static_cast<std::size_t>(k)] = q;
  }
  for (int i = 0; i < pattern.lines(); ++i)
    for (int k = 0; k < pattern.points(); ++k)
      if (pattern.incident(i, k) !=
          host.incident(line_map[static_cast<std::size_t>(i)],
                        pm[static_cast<std::size_t>(k)]))
        throw ArrangementError(
            ArrangementError::Kind::BadParameter,
            "line_map does not embed the two-pencil pattern", i, k);
  return pm;
}

// Fill the comparison routes, verdict, and witness from the negative index
// of the outside form.
void finish_report(ObstructionReport& rep, long long n_minus,
                   long long branch_lines) {
  const CoverInvariants& cov = rep.cover;
  const long long needed_total = rep.p * n_minus + branch_lines;
  const long long b2_cover = cov.chi_total - 2;  // b1 = 0 for these covers
  const long long sum_minus =
      std::accumulate(cov.b2_minus.begin(), cov.b2_minus.end(), 0LL);

  rep.eigen_lower_bound.assign(static_cast<std::size_t>(rep.p), n_minus);
  rep.eigen_lower_bound[0] = 0;

  rep.routes.clear();
  rep.routes.push_back({"total-b2", -1, needed_total, b2_cover,
                        needed_total > b2_cover});
  for (int r = 1; r < rep.p; ++r) {
    const long long avail = cov.b2_minus[static_cast<std::size_t>(r)];
    rep.routes.push_back({"eigenspace", r, n_minus, avail, n_minus > avail});
  }
  rep.routes.push_back({"total-b2-minus", -1, needed_total, sum_minus,
                        needed_total > sum_minus});

  rep.witness.reset();
  for (const auto& rc : rep.routes) {
    if (rc.fires) {
      rep.witness = rc;
      break;
    }
  }
  rep.obstructed = rep.witness.has_value();
  rep.corollary_nonfillable = rep.obstructed;
}

// First strict two-pencil(p, 1, 1) sub-arrangement of the order-p plane.
SubArrangementEmbedding first_two_pencil_embedding(const Arrangement& host,
                                                   int p) {
  auto embs = find_subarrangement(host, two_pencil(p, 1, 1),
                                  /*strict_only=*/true, /*max_results=*/1);
  if (embs.empty())
    throw std::logic_error("projective plane lost its two-pencil");
  return embs.front();
}

}  // namespace

ObstructionReport obstruct_arrangement(const Arrangement& host, int p,
                                       int alpha, int beta,
                                       const SubArrangementEmbedding& branch,
                                       std::vector<int> blown_points) {
  if (!is_prime(p))
    throw ArrangementError(ArrangementError::Kind::NotPrime,
                           "cover degree p must be prime");
  if (alpha < 1 || beta < 1)
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "pencil multiples must be >= 1");
  const Arrangement pattern = two_pencil(p, alpha, beta);
  const std::vector<int> pm =
      embedded_point_map(host, pattern, branch.line_map);
  if (!branch.point_map.empty() && branch.point_map != pm)
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "point_map inconsistent with line_map");

  BlowupModel model(host, blown_points);  // validates the blown set

  std::vector<char> blown(static_cast<std::size_t>(host.points()), 0);
  for (int q : blown_points) blown[static_cast<std::size_t>(q)] = 1;
  std::vector<char> image(static_cast<std::size_t>(host.points()), 0);
  for (int q : pm) image[static_cast<std::size_t>(q)] = 1;
  std::vector<char> on_branch(static_cast<std::size_t>(host.lines()), 0);
  for (int h : branch.line_map) on_branch[static_cast<std::size_t>(h)] = 1;

  // Blow-up hypothesis: the blown points on branch lines are exactly the
  // pairwise intersections of branch lines.
  for (int q : pm) {
    if (!blown[static_cast<std::size_t>(q)])
      throw HypothesisViolation("branch intersection point " +
                                std::to_string(q) + " is not blown up");
  }
  for (int q : blown_points) {
    if (image[static_cast<std::size_t>(q)]) continue;
    for (int h : host.lines_through(q)) {
      if (on_branch[static_cast<std::size_t>(h)])
        throw HypothesisViolation(
            "blown point " + std::to_string(q) + " lies on branch line " +
            std::to_string(h) + " without being a branch intersection");
    }
  }

  const auto transforms = proper_transforms(model);
  std::vector<int> outside;
  for (int l = 0; l < host.lines(); ++l)
    if (!on_branch[static_cast<std::size_t>(l)]) outside.push_back(l);

  // Outside transforms must be disjoint from the branch transforms, so that
  // each lifts to p disjoint spheres in the cover.
  for (int o : outside) {
    for (int h : branch.line_map) {
      if (intersection_number(transforms[static_cast<std::size_t>(o)],
                              transforms[static_cast<std::size_t>(h)]) != 0)
        throw BranchNotStrictlyEmbedded(
            "line " + std::to_string(o) + " meets branch line " +
            std::to_string(h) + " at a point that is not blown up");
    }
  }

  ObstructionReport rep;
  rep.arrangement_hash = incidence_hash(host);
  rep.p = p;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.branch_embedding.line_map = branch.line_map;
  rep.branch_embedding.point_map = pm;
  rep.branch_embedding.strict = true;  // certified by the two checks above
  rep.blown_points = std::move(blown_points);
  rep.outside_lines = outside;

  const int mcount = static_cast<int>(outside.size());
  rep.outside_form.assign(static_cast<std::size_t>(mcount),
                          std::vector<long long>(static_cast<std::size_t>(mcount), 0));
  rep.eigen_form = rep.outside_form;
  for (int i = 0; i < mcount; ++i) {
    for (int j = 0; j < mcount; ++j) {
      const long long v = intersection_number(
          transforms[static_cast<std::size_t>(outside[static_cast<std::size_t>(i)])],
          transforms[static_cast<std::size_t>(outside[static_cast<std::size_t>(j)])]);
      rep.outside_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      rep.eigen_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p * v;
    }
  }
  rep.outside_inertia = inertia(rep.outside_form);
  rep.outside_rank = rep.outside_inertia.n_plus + rep.outside_inertia.n_minus;

  rep.cover = two_pencil_cover_invariants(
      p, alpha, beta, static_cast<long long>(rep.blown_points.size()));
  finish_report(rep, rep.outside_inertia.n_minus, pattern.lines());
  return rep;
}

ObstructionReport obstruct_projective_plane(int p) {
  if (!is_prime(p))
    throw ArrangementError(ArrangementError::Kind::NotPrime,
                           "plane order must be prime");
  const Arrangement host = projective_plane(p);
  const SubArrangementEmbedding emb = first_two_pencil_embedding(host, p);
  std::vector<int> blown(static_cast<std::size_t>(host.points()));
  std::iota(blown.begin(), blown.end(), 0);
  return obstruct_arrangement(host, p, 1, 1, emb, std::move(blown));
}

ObstructionReport obstruct_deletion(int p, int t) {
  if (!is_prime(p) || p == 2)
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "deletion argument needs an odd prime");
  const long long outside_full = static_cast<long long>(p) * p - p + 1;
  if (t < 0 || t > outside_full)
    throw InvalidDeletion("can delete between 0 and " +
                          std::to_string(outside_full) +
                          " lines disjoint from the branch set, got " +
                          std::to_string(t));
  const Arrangement host = projective_plane(p);
  const SubArrangementEmbedding emb = first_two_pencil_embedding(host, p);

  ObstructionReport rep;
  rep.arrangement_hash = incidence_hash(host);
  rep.p = p;
  rep.alpha = 1;
  rep.beta = 1;
  rep.branch_embedding = emb;
  rep.blown_points.assign(static_cast<std::size_t>(host.points()), 0);
  std::iota(rep.blown_points.begin(), rep.blown_points.end(), 0);

  // Keep the first outside lines in line order; the last t are deleted.
  std::vector<char> on_branch(static_cast<std::size_t>(host.lines()), 0);
  for (int h : emb.line_map) on_branch[static_cast<std::size_t>(h)] = 1;
  const long long survivors = outside_full - t;
  for (int l = 0; l < host.lines() &&
                  static_cast<long long>(rep.outside_lines.size()) < survivors;
       ++l)
    if (!on_branch[static_cast<std::size_t>(l)]) rep.outside_lines.push_back(l);

  // Every original point stays blown, so each surviving outside line keeps
  // all p + 1 of its points blown: transform square -p, pairwise disjoint.
  const int mcount = static_cast<int>(survivors);
  rep.outside_form.assign(static_cast<std::size_t>(mcount),
                          std::vector<long long>(static_cast<std::size_t>(mcount), 0));
  rep.eigen_form = rep.outside_form;
  for (int i = 0; i < mcount; ++i) {
    rep.outside_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -p;
    rep.eigen_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        -static_cast<long long>(p) * p;
  }
  rep.outside_inertia = {0, 0, mcount};
  rep.outside_rank = mcount;

  rep.cover = two_pencil_cover_invariants(
      p, 1, 1, static_cast<long long>(host.points()));
  finish_report(rep, mcount, 2LL * p);
  return rep;
}

}  // namespace arrange
