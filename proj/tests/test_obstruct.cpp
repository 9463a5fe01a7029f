#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "arrange/obstruct.hpp"
#include "fixtures.hpp"

using namespace arrange;

namespace {

std::vector<int> all_points(const Arrangement& a) {
  std::vector<int> pts(static_cast<std::size_t>(a.points()));
  std::iota(pts.begin(), pts.end(), 0);
  return pts;
}

// needed > available re-evaluated from the report's stored numbers.
void check_self_consistency(const ObstructionReport& rep) {
  bool any = false;
  const RouteComparison* first = nullptr;
  for (const auto& rc : rep.routes) {
    CHECK(rc.fires == (rc.needed > rc.available));
    if (rc.fires && !first) first = &rc;
    any = any || rc.fires;
  }
  CHECK(rep.obstructed == any);
  CHECK(rep.corollary_nonfillable == rep.obstructed);
  if (any) {
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == *first);
  } else {
    CHECK_FALSE(rep.witness.has_value());
  }
}

const RouteComparison& route(const ObstructionReport& rep,
                             const std::string& name, int r = -1) {
  for (const auto& rc : rep.routes)
    if (rc.route == name && rc.r == r) return rc;
  REQUIRE(false);
  static RouteComparison dummy;
  return dummy;
}

}  // namespace

TEST_CASE("inertia of fixed symmetric matrices") {
  CHECK(inertia({}) == Inertia{0, 0, 0});
  CHECK(inertia({{5}}) == Inertia{1, 0, 0});
  CHECK(inertia({{-5}}) == Inertia{0, 0, 1});
  CHECK(inertia({{0}}) == Inertia{0, 1, 0});
  CHECK(inertia({{-3, 1}, {1, -3}}) == Inertia{0, 0, 2});
  CHECK(inertia({{0, 1}, {1, 0}}) == Inertia{1, 0, 1});
  CHECK(inertia({{2, 0, 0}, {0, -5, 0}, {0, 0, 0}}) == Inertia{1, 1, 1});
  CHECK(inertia({{1, 2}, {2, 4}}) == Inertia{1, 1, 0});  // rank-one Gram
  CHECK(inertia({{0, 0}, {0, 0}}) == Inertia{0, 2, 0});
  SymMatrix three_blocks(6, std::vector<long long>(6, 0));
  for (int b = 0; b < 3; ++b) {
    three_blocks[2 * b][2 * b] = -6;
    three_blocks[2 * b + 1][2 * b + 1] = -6;
    three_blocks[2 * b][2 * b + 1] = 2;
    three_blocks[2 * b + 1][2 * b] = 2;
  }
  CHECK(inertia(three_blocks) == Inertia{0, 0, 6});

  CHECK_THROWS_AS(inertia({{1, 2}, {3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(inertia({{1, 2, 3}, {2, 1, 1}}), std::invalid_argument);
}

TEST_CASE("inertia is a congruence invariant") {
  // A = P^T D P with P unimodular upper triangular has the inertia of D.
  std::mt19937 rng(20260825);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> diag(-4, 4);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<long long> d(static_cast<std::size_t>(n));
    Inertia expect;
    for (auto& v : d) {
      v = diag(rng);
      if (v > 0)
        ++expect.n_plus;
      else if (v < 0)
        ++expect.n_minus;
      else
        ++expect.n_zero;
    }
    std::vector<std::vector<long long>> p(
        static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
      p[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = sign(rng) ? 1 : -1;
      for (int j = i + 1; j < n; ++j)
        p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(rng);
    }
    SymMatrix a(static_cast<std::size_t>(n),
                std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              p[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
              d[static_cast<std::size_t>(k)] *
              p[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    CHECK(inertia(a) == expect);
  }
}

TEST_CASE("incidence hash is stable and content-sensitive") {
  const std::string h1 = incidence_hash(fixtures::plane7());
  CHECK(h1.size() == 16);
  CHECK(h1 == incidence_hash(fixtures::plane7()));
  CHECK(h1 != incidence_hash(two_pencil(2, 1, 1)));
  CHECK(h1 != incidence_hash(projective_plane(3)));
}

TEST_CASE("projective plane obstruction at p = 2: the signature route") {
  const ObstructionReport rep = obstruct_projective_plane(2);
  CHECK(rep.p == 2);
  CHECK(rep.cover.chi_total == 12);
  CHECK(rep.cover.chi_total - 2 == 10);  // b2 of the cover
  CHECK(rep.cover.b2_minus == std::vector<long long>{7, 2});
  CHECK(rep.cover.b2_plus == std::vector<long long>{1, 0});
  CHECK(rep.blown_points.size() == 7);
  CHECK(rep.outside_lines.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(rep.outside_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
            (i == j ? -2 : 0));
      CHECK(rep.eigen_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
            (i == j ? -4 : 0));
    }
  CHECK(rep.outside_inertia == Inertia{0, 0, 3});
  CHECK(rep.outside_rank == 3);
  CHECK(rep.eigen_lower_bound == std::vector<long long>{0, 3});

  // The plain count 10 <= 10 does not fire; the eigenspace count does.
  CHECK(route(rep, "total-b2").needed == 10);
  CHECK(route(rep, "total-b2").available == 10);
  CHECK_FALSE(route(rep, "total-b2").fires);
  CHECK(route(rep, "eigenspace", 1).needed == 3);
  CHECK(route(rep, "eigenspace", 1).available == 2);
  CHECK(route(rep, "eigenspace", 1).fires);
  CHECK(route(rep, "total-b2-minus").needed == 10);
  CHECK(route(rep, "total-b2-minus").available == 9);
  CHECK(route(rep, "total-b2-minus").fires);

  CHECK(rep.obstructed);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->route == "eigenspace");
  CHECK(rep.witness->r == 1);
  CHECK(rep.corollary_nonfillable);
  check_self_consistency(rep);
}

TEST_CASE("projective plane obstruction at p = 3 and p = 5: the count route") {
  const ObstructionReport r3 = obstruct_projective_plane(3);
  CHECK(r3.cover.chi_total - 2 == 22);
  CHECK(route(r3, "total-b2").needed == 27);
  CHECK(route(r3, "total-b2").available == 22);
  REQUIRE(r3.witness.has_value());
  CHECK(r3.witness->route == "total-b2");
  CHECK(r3.obstructed);
  check_self_consistency(r3);

  const ObstructionReport r5 = obstruct_projective_plane(5);
  CHECK(route(r5, "total-b2").needed == 115);
  CHECK(route(r5, "total-b2").available == 88);
  CHECK(r5.witness->route == "total-b2");
  check_self_consistency(r5);
}

TEST_CASE("count inequality closed form for the plane family") {
  // needed - available reduces to 2p^2 - 5p - 2 + ...: the generic-p count
  // inequality p(p^2-3p+8)-2 < p(p^2-p+3) is equivalent to 2p^2 > 5p + 2.
  for (int p = 2; p <= 50; ++p) {
    if (!is_prime(p)) continue;
    const long long lhs = static_cast<long long>(p) * (p * p - 3 * p + 8) - 2;
    const long long rhs = static_cast<long long>(p) * (p * p - p + 3);
    CHECK((lhs < rhs) == (2LL * p * p > 5LL * p + 2));
    if (p > 2) CHECK(lhs < rhs);
  }
}

TEST_CASE("every small plane is obstructed") {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    CAPTURE(p);
    const ObstructionReport rep = obstruct_projective_plane(p);
    CHECK(rep.obstructed);
    CHECK(rep.corollary_nonfillable);
    CHECK(static_cast<long long>(rep.outside_lines.size()) ==
          static_cast<long long>(p) * p - p + 1);
    CHECK(rep.outside_inertia.n_minus ==
          static_cast<int>(rep.outside_lines.size()));
    check_self_consistency(rep);
  }
  CHECK_THROWS_AS(obstruct_projective_plane(4), ArrangementError);
}

TEST_CASE("general engine specializes to the plane pipeline") {
  for (int p : {2, 3}) {
    CAPTURE(p);
    const Arrangement host = projective_plane(p);
    const auto embs =
        find_subarrangement(host, two_pencil(p, 1, 1), true, 1);
    REQUIRE(embs.size() == 1);
    const ObstructionReport direct =
        obstruct_arrangement(host, p, 1, 1, embs[0], all_points(host));
    CHECK(direct == obstruct_projective_plane(p));
  }
}

TEST_CASE("a two-pencil with nothing outside is not obstructed") {
  const Arrangement host = two_pencil(2, 1, 1);
  SubArrangementEmbedding identity;
  identity.line_map = {0, 1, 2, 3};
  const ObstructionReport rep =
      obstruct_arrangement(host, 2, 1, 1, identity, all_points(host));
  CHECK(rep.outside_lines.empty());
  CHECK(rep.outside_form.empty());
  CHECK(rep.outside_inertia == Inertia{0, 0, 0});
  CHECK(rep.eigen_lower_bound == std::vector<long long>{0, 0});
  CHECK_FALSE(rep.obstructed);
  CHECK_FALSE(rep.witness.has_value());
  CHECK_FALSE(rep.corollary_nonfillable);
  check_self_consistency(rep);
}

TEST_CASE("the unique (14_4) configuration is obstructed") {
  // static: the search is expensive and subcases re-enter the body
  static const auto found = search_nk(14, 4);
  REQUIRE(found.size() == 1);
  const Arrangement& host = found.front();
  const auto embs = find_subarrangement(host, two_pencil(2, 2, 2), true, 1);
  REQUIRE_FALSE(embs.empty());
  std::vector<int> blown = embs[0].point_map;
  std::sort(blown.begin(), blown.end());
  REQUIRE(blown.size() == 18);

  const ObstructionReport rep =
      obstruct_arrangement(host, 2, 2, 2, embs[0], blown);

  // Outside form: three hyperbolic-like blocks [[-3,1],[1,-3]] up to
  // simultaneous permutation: diagonal -3, one +1 partner per line.
  REQUIRE(rep.outside_form.size() == 6);
  std::vector<int> partner(6, -1);
  for (int i = 0; i < 6; ++i) {
    CHECK(rep.outside_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] == -3);
    int ones = 0;
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      const long long v =
          rep.outside_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      CHECK((v == 0 || v == 1));
      if (v == 1) {
        ++ones;
        partner[static_cast<std::size_t>(i)] = j;
      }
    }
    CHECK(ones == 1);
  }
  for (int i = 0; i < 6; ++i) {
    CHECK(partner[static_cast<std::size_t>(i)] != i);
    CHECK(partner[static_cast<std::size_t>(partner[static_cast<std::size_t>(i)])] == i);
    for (int j = 0; j < 6; ++j)
      CHECK(rep.eigen_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
            2 * rep.outside_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  CHECK(rep.outside_inertia == Inertia{0, 0, 6});
  CHECK(rep.outside_rank == 6);
  CHECK(rep.cover.b2_minus == std::vector<long long>{18, 3});
  CHECK(route(rep, "eigenspace", 1).needed == 6);
  CHECK(route(rep, "eigenspace", 1).available == 3);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->route == "eigenspace");
  CHECK(rep.obstructed);
  check_self_consistency(rep);

  SUBCASE("blowing up the three leftover points kills the argument") {
    const ObstructionReport all21 =
        obstruct_arrangement(host, 2, 2, 2, embs[0], all_points(host));
    CHECK(all21.cover.b2_minus == std::vector<long long>{21, 6});
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        CHECK(all21.outside_form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
              (i == j ? -4 : 0));
    CHECK_FALSE(all21.obstructed);
    check_self_consistency(all21);
  }

  SUBCASE("each extra off-branch blow-up raises b2_minus(1) by one") {
    std::vector<int> extras;
    for (int q : all_points(host))
      if (std::find(blown.begin(), blown.end(), q) == blown.end())
        extras.push_back(q);
    REQUIRE(extras.size() == 3);
    std::vector<int> grown = blown;
    long long prev = rep.cover.b2_minus[1];
    for (int q : extras) {
      grown.push_back(q);
      const ObstructionReport step =
          obstruct_arrangement(host, 2, 2, 2, embs[0], grown);
      CHECK(step.cover.b2_minus[1] == prev + 1);
      CHECK(step.cover.b2_minus[0] ==
            static_cast<long long>(grown.size()));
      prev = step.cover.b2_minus[1];
    }
  }
}

TEST_CASE("hypothesis and strictness violations are detected") {
  const Arrangement host = projective_plane(3);
  const auto embs = find_subarrangement(host, two_pencil(2, 1, 1), false, 1);
  REQUIRE_FALSE(embs.empty());
  const auto& emb = embs[0];

  // Blowing up every point puts non-branch points on branch lines (each
  // branch line has 4 points, only 3 of them pencil intersections).
  CHECK_THROWS_AS(
      obstruct_arrangement(host, 2, 1, 1, emb, all_points(host)),
      HypothesisViolation);

  // Blowing up only the six intersections leaves the fourth point of each
  // branch line unblown, where outside lines still cross the branch.
  std::vector<int> images = emb.point_map;
  std::sort(images.begin(), images.end());
  CHECK_THROWS_AS(obstruct_arrangement(host, 2, 1, 1, emb, images),
                  BranchNotStrictlyEmbedded);

  // Forgetting one branch intersection violates the hypothesis directly.
  const Arrangement fano = projective_plane(2);
  const auto fano_embs = find_subarrangement(fano, two_pencil(2, 1, 1), true, 1);
  REQUIRE_FALSE(fano_embs.empty());
  std::vector<int> missing = all_points(fano);
  missing.erase(std::find(missing.begin(), missing.end(),
                          fano_embs[0].point_map[0]));
  CHECK_THROWS_AS(obstruct_arrangement(fano, 2, 1, 1, fano_embs[0], missing),
                  HypothesisViolation);
}

TEST_CASE("malformed branch embeddings are rejected") {
  const Arrangement host = projective_plane(2);
  const auto embs = find_subarrangement(host, two_pencil(2, 1, 1), true, 1);
  REQUIRE_FALSE(embs.empty());
  SubArrangementEmbedding bad = embs[0];

  bad.line_map.pop_back();
  CHECK_THROWS_AS(obstruct_arrangement(host, 2, 1, 1, bad, all_points(host)),
                  ArrangementError);

  bad = embs[0];
  bad.line_map[1] = bad.line_map[0];
  CHECK_THROWS_AS(obstruct_arrangement(host, 2, 1, 1, bad, all_points(host)),
                  ArrangementError);

  bad = embs[0];
  std::swap(bad.point_map[0], bad.point_map[1]);
  CHECK_THROWS_AS(obstruct_arrangement(host, 2, 1, 1, bad, all_points(host)),
                  ArrangementError);

  CHECK_THROWS_AS(
      obstruct_arrangement(host, 4, 1, 1, embs[0], all_points(host)),
      ArrangementError);
  CHECK_THROWS_AS(
      obstruct_arrangement(host, 2, 0, 1, embs[0], all_points(host)),
      ArrangementError);
}

TEST_CASE("deletion pipeline: threshold and fixed examples") {
  const ObstructionReport d32 = obstruct_deletion(3, 2);
  CHECK(d32.outside_lines.size() == 5);
  CHECK(route(d32, "eigenspace", 1).needed == 5);
  CHECK(route(d32, "eigenspace", 1).available == 4);
  CHECK(d32.obstructed);
  check_self_consistency(d32);

  const ObstructionReport d33 = obstruct_deletion(3, 3);
  CHECK_FALSE(d33.obstructed);
  check_self_consistency(d33);

  const ObstructionReport d510 = obstruct_deletion(5, 10);
  CHECK(route(d510, "eigenspace", 2).needed == 11);
  CHECK(route(d510, "eigenspace", 2).available == 10);
  CHECK(d510.obstructed);
  check_self_consistency(d510);
}

TEST_CASE("deletion verdict is exactly t < (p^2 - 3) / 2") {
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    const int outside_full = p * p - p + 1;
    for (int t = 0; t <= outside_full; ++t) {
      CAPTURE(t);
      const ObstructionReport rep = obstruct_deletion(p, t);
      CHECK(rep.obstructed == (t < (p * p - 3) / 2));
      check_self_consistency(rep);
    }
  }
}

TEST_CASE("deletion rejects out-of-range input") {
  CHECK_THROWS_AS(obstruct_deletion(3, -1), InvalidDeletion);
  CHECK_THROWS_AS(obstruct_deletion(3, 8), InvalidDeletion);
  CHECK_NOTHROW(obstruct_deletion(3, 7));
  CHECK_THROWS_AS(obstruct_deletion(2, 0), ArrangementError);
  CHECK_THROWS_AS(obstruct_deletion(9, 0), ArrangementError);
}
