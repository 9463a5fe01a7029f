#include "arrange/wiring.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "arrange/arrangement.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace arrange;

namespace {

WiringDiagram make_word(int n, const std::vector<int>& crossings) {
  WiringDiagram w{n, {}};
  for (int i : crossings) w.word.push_back(Letter::cross(i));
  return w;
}

// Independent oracle: depth-first enumeration of every crossings-only
// diagram, by choosing at each step any adjacent wire pair that has not
// crossed yet.
std::vector<std::vector<int>> all_reduced_words(int n) {
  const int total = n * (n - 1) / 2;
  std::vector<int> wire_at(n);
  for (int h = 0; h < n; ++h) wire_at[h] = h + 1;
  std::vector<std::vector<bool>> crossed(n + 1, std::vector<bool>(n + 1));
  std::vector<int> word;
  std::vector<std::vector<int>> out;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(word.size()) == total) {
      out.push_back(word);
      return;
    }
    for (int i = 1; i <= n - 1; ++i) {
      int a = wire_at[i - 1], b = wire_at[i];
      if (a > b) std::swap(a, b);
      if (crossed[a][b]) continue;
      crossed[a][b] = true;
      std::swap(wire_at[i - 1], wire_at[i]);
      word.push_back(i);
      rec();
      word.pop_back();
      std::swap(wire_at[i - 1], wire_at[i]);
      crossed[a][b] = false;
    }
  };
  rec();
  return out;
}

// All single-move neighbours of a crossings-only word (patterns checked
// directly, so this is usable as a graph oracle).
std::vector<std::vector<int>> word_neighbours(int n, const std::vector<int>& w) {
  std::vector<std::vector<int>> out;
  const int len = static_cast<int>(w.size());
  for (int p = 0; p + 1 < len; ++p)
    if (std::abs(w[p] - w[p + 1]) >= 2) {
      auto v = w;
      std::swap(v[p], v[p + 1]);
      out.push_back(std::move(v));
    }
  for (int p = 0; p + 2 < len; ++p)
    if (w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
      auto v = w;
      v[p] = w[p + 1];
      v[p + 1] = w[p];
      v[p + 2] = w[p + 1];
      out.push_back(std::move(v));
    }
  (void)n;
  return out;
}

std::vector<std::pair<int, int>> dictionary_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
  return out;
}

// Replays events one at a time, requiring every intermediate diagram to
// satisfy the exactly-once crossing rule.
WiringDiagram replay_checked(WiringDiagram w,
                             const std::vector<HomotopyEvent>& events) {
  check_diagram(w);
  for (const HomotopyEvent& e : events) {
    w = apply_move(w, e);
    check_diagram(w);
  }
  return w;
}

Arrangement triangle() {
  return Arrangement::validate({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

}  // namespace

TEST_CASE("canonical word follows the dictionary pair order") {
  CHECK(canonical_word(2) == make_word(2, {1}));
  CHECK(canonical_word(3) == make_word(3, {1, 2, 1}));
  CHECK(canonical_word(4) == make_word(4, {1, 2, 3, 1, 2, 1}));
  for (int n = 2; n <= 6; ++n) {
    WiringDiagram w = canonical_word(n);
    CHECK(static_cast<int>(w.word.size()) == n * (n - 1) / 2);
    CHECK_NOTHROW(check_diagram(w));
    auto pairs = letter_pairs(w);
    auto dict = dictionary_pairs(n);
    REQUIRE(pairs.size() == dict.size());
    for (size_t t = 0; t < dict.size(); ++t) {
      REQUIRE(pairs[t].size() == 1);
      CHECK(pairs[t][0] == dict[t]);
    }
  }
  CHECK_THROWS_AS(canonical_word(1), InvalidDiagram);
  CHECK_THROWS_AS(canonical_word(0), InvalidDiagram);
}

TEST_CASE("diagram validation enforces the exactly-once crossing rule") {
  CHECK_NOTHROW(check_diagram(WiringDiagram{1, {}}));
  CHECK_NOTHROW(check_diagram(WiringDiagram{3, {Letter::multi(1, 3)}}));
  CHECK_NOTHROW(check_diagram(make_word(2, {1})));

  CHECK_THROWS_AS(check_diagram(WiringDiagram{0, {}}), InvalidDiagram);
  // missing crossings
  CHECK_THROWS_AS(check_diagram(WiringDiagram{2, {}}), InvalidDiagram);
  CHECK_THROWS_AS(check_diagram(make_word(3, {1, 2})), InvalidDiagram);
  // repeated crossings
  CHECK_THROWS_AS(check_diagram(make_word(2, {1, 1})), InvalidDiagram);
  CHECK_THROWS_AS(
      check_diagram(WiringDiagram{3, {Letter::multi(1, 3), Letter::cross(1)}}),
      InvalidDiagram);
  // out-of-range letters
  CHECK_THROWS_AS(check_diagram(make_word(3, {3, 1, 2})), InvalidDiagram);
  CHECK_THROWS_AS(check_diagram(make_word(3, {0, 1, 2})), InvalidDiagram);
  CHECK_THROWS_AS(check_diagram(WiringDiagram{3, {Letter{1, 1}}}),
                  InvalidDiagram);
  CHECK_THROWS_AS(check_diagram(WiringDiagram{3, {Letter{2, 3}}}),
                  InvalidDiagram);
}

TEST_CASE("letter_pairs labels each letter with the wires it crosses") {
  WiringDiagram w{4, {Letter::multi(1, 4)}};
  auto pairs = letter_pairs(w);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == dictionary_pairs(4));

  // After the full multipoint the wires are reversed, so a following letter
  // would touch high labels first; check via the two-block diagram.
  WiringDiagram v = make_word(3, {2, 1, 2});
  auto vp = letter_pairs(v);
  REQUIRE(vp.size() == 3);
  CHECK(vp[0] == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(vp[1] == std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(vp[2] == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("braid moves rewrite the expected patterns") {
  WiringDiagram w = make_word(3, {1, 2, 1});
  HomotopyEvent b1{HomotopyEvent::Kind::BraidMove1, 0, 0, {}};
  WiringDiagram r = apply_move(w, b1);
  CHECK(r == make_word(3, {2, 1, 2}));
  CHECK(apply_move(r, b1) == w);  // the rewrite is an involution

  // Commuting swap on a word fragment (not a complete diagram).
  WiringDiagram frag = make_word(4, {1, 3});
  HomotopyEvent b2{HomotopyEvent::Kind::BraidMove2, 0, 0, {}};
  CHECK(apply_move(frag, b2) == make_word(4, {3, 1}));

  HomotopyEvent iso{HomotopyEvent::Kind::PlanarIsotopy, 0, 0, "wiggle"};
  CHECK(apply_move(w, iso) == w);

  CHECK_THROWS_AS(apply_move(make_word(3, {1, 2}), b1), MoveNotApplicable);
  CHECK_THROWS_AS(apply_move(make_word(4, {1, 3, 1}), b1), MoveNotApplicable);
  CHECK_THROWS_AS(apply_move(make_word(3, {1, 2, 1}), b2), MoveNotApplicable);
  HomotopyEvent neg{HomotopyEvent::Kind::BraidMove2, -1, 0, {}};
  CHECK_THROWS_AS(apply_move(frag, neg), MoveNotApplicable);
  HomotopyEvent multi_in_pattern{HomotopyEvent::Kind::BraidMove2, 0, 0, {}};
  CHECK_THROWS_AS(
      apply_move(WiringDiagram{4, {Letter::multi(1, 3), Letter::cross(3)}},
                 multi_in_pattern),
      MoveNotApplicable);
}

TEST_CASE("splitting and merging a multipoint are inverse moves") {
  WiringDiagram pencil3{3, {Letter::multi(1, 3)}};
  HomotopyEvent split{HomotopyEvent::Kind::SplitMulti, 0, 0, {}};
  WiringDiagram spread = apply_move(pencil3, split);
  CHECK(spread == make_word(3, {1, 2, 1}));
  HomotopyEvent merge{HomotopyEvent::Kind::MergeMulti, 0, 3, {}};
  CHECK(apply_move(spread, merge) == pencil3);

  // Shifted block inside a larger diagram.
  WiringDiagram mid{5, {Letter::multi(2, 4)}};
  WiringDiagram mid_spread = apply_move(mid, split);
  CHECK(mid_spread == make_word(5, {2, 3, 4, 2, 3, 2}));
  HomotopyEvent merge4{HomotopyEvent::Kind::MergeMulti, 0, 4, {}};
  CHECK(apply_move(mid_spread, merge4) == mid);

  CHECK_THROWS_AS(apply_move(make_word(3, {1, 2, 1}), split),
                  MoveNotApplicable);  // split needs a multipoint
  CHECK_THROWS_AS(apply_move(make_word(3, {2, 1, 2}), merge),
                  MoveNotApplicable);  // not the dictionary-order block
  HomotopyEvent merge2{HomotopyEvent::Kind::MergeMulti, 0, 2, {}};
  CHECK_THROWS_AS(apply_move(make_word(2, {1}), merge2), MoveNotApplicable);
  HomotopyEvent merge_far{HomotopyEvent::Kind::MergeMulti, 1, 3, {}};
  CHECK_THROWS_AS(apply_move(make_word(3, {1, 2, 1}), merge_far),
                  MoveNotApplicable);
}

TEST_CASE("canonicalize produces a minimal certificate on small examples") {
  auto [c0, m0] = canonicalize(canonical_word(5));
  CHECK(c0 == canonical_word(5));
  CHECK(m0.empty());

  auto [c1, m1] = canonicalize(make_word(3, {2, 1, 2}));
  CHECK(c1 == canonical_word(3));
  REQUIRE(m1.size() == 1);
  CHECK(m1[0].kind == HomotopyEvent::Kind::BraidMove1);
  CHECK(m1[0].position == 0);

  CHECK_THROWS_AS(canonicalize(WiringDiagram{3, {Letter::multi(1, 3)}}),
                  InvalidDiagram);
  CHECK_THROWS_AS(canonicalize(make_word(3, {1, 2})), InvalidDiagram);
}

TEST_CASE("every reduced word canonicalizes with a replayable certificate") {
  const std::vector<size_t> expected_counts{0, 0, 1, 2, 16, 768};
  for (int n = 2; n <= 5; ++n) {
    auto words = all_reduced_words(n);
    CHECK(words.size() == expected_counts[n]);
    for (const auto& ww : words) {
      WiringDiagram w = make_word(n, ww);
      auto [canon, moves] = canonicalize(w);
      CHECK(canon == canonical_word(n));
      CHECK(replay_checked(w, moves) == canonical_word(n));
    }
  }
}

TEST_CASE("braid moves connect the canonical word to every reduced word") {
  for (int n = 3; n <= 5; ++n) {
    auto words = all_reduced_words(n);
    std::set<std::vector<int>> everything(words.begin(), words.end());
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    std::vector<int> start;
    for (const Letter& l : canonical_word(n).word) start.push_back(l.i);
    seen.insert(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
      auto cur = frontier.back();
      frontier.pop_back();
      for (auto& nb : word_neighbours(n, cur))
        if (seen.insert(nb).second) frontier.push_back(nb);
    }
    CHECK(seen == everything);
  }
}

TEST_CASE("homotopy_to_pencil collapses any diagram onto one multipoint") {
  // Already a pencil: split + merge round trip.
  WiringDiagram pencil{3, {Letter::multi(1, 3)}};
  auto ev = homotopy_to_pencil(pencil);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].kind == HomotopyEvent::Kind::SplitMulti);
  CHECK(ev[1].kind == HomotopyEvent::Kind::MergeMulti);
  CHECK(replay_checked(pencil, ev) == pencil);

  // One braid move then the merge.
  WiringDiagram w = make_word(3, {2, 1, 2});
  auto ev2 = homotopy_to_pencil(w);
  CHECK(replay_checked(w, ev2) == pencil);

  // Two wires: the single crossing already is the pencil.
  WiringDiagram two = make_word(2, {1});
  CHECK(homotopy_to_pencil(two).empty());

  // One wire: nothing to do.
  CHECK(homotopy_to_pencil(WiringDiagram{1, {}}).empty());

  // Every n = 4 reduced word ends at the four-wire multipoint.
  WiringDiagram pencil4{4, {Letter::multi(1, 4)}};
  for (const auto& ww : all_reduced_words(4)) {
    WiringDiagram d = make_word(4, ww);
    CHECK(replay_checked(d, homotopy_to_pencil(d)) == pencil4);
  }
}

TEST_CASE("from_arrangement wires a triangle and rejects bad orders") {
  Arrangement tri = triangle();
  WiringDiagram w = from_arrangement(tri, {0, 1, 2}, {0, 1, 2});
  CHECK(w == make_word(3, {1, 2, 1}));

  // Point 1 lies on lines 0 and 2, which start at heights 1 and 3.
  CHECK_THROWS_AS(from_arrangement(tri, {0, 1, 2}, {1, 0, 2}), NotWirable);

  CHECK_THROWS_AS(from_arrangement(tri, {0, 0, 1}, {0, 1, 2}),
                  ArrangementError);
  CHECK_THROWS_AS(from_arrangement(tri, {0, 1}, {0, 1, 2}), ArrangementError);
  CHECK_THROWS_AS(from_arrangement(tri, {0, 1, 2}, {0, 1, 3}),
                  ArrangementError);
  CHECK_THROWS_AS(from_arrangement(tri, {0, 1, 2}, {0, 1}), ArrangementError);
}

TEST_CASE("from_arrangement letters match the arrangement's points") {
  Arrangement a = two_pencil(2, 2, 2);
  std::vector<int> line_order{0, 1, 2, 3, 4, 5, 6, 7};
  std::vector<int> point_order{0, 2, 6, 10, 14, 3, 7, 11, 15,
                               4, 8, 12, 16, 5, 9, 13, 17, 1};
  WiringDiagram w = from_arrangement(a, line_order, point_order);
  CHECK(format_word(w) ==
        "n=8; m(1,4) t4 t3 t2 t1 t5 t4 t3 t2 t6 t5 t4 t3 t7 t6 t5 t4 m(1,4)");

  // The wires through each letter are exactly the lines through its point.
  auto pairs = letter_pairs(w);
  REQUIRE(pairs.size() == point_order.size());
  for (size_t t = 0; t < pairs.size(); ++t) {
    std::set<int> lines;
    for (auto [x, y] : pairs[t]) {
      lines.insert(line_order[x - 1]);
      lines.insert(line_order[y - 1]);
    }
    const auto& through = a.lines_through(point_order[t]);
    CHECK(lines == std::set<int>(through.begin(), through.end()));
  }

  // The full homotopy flattens it onto a single multipoint.
  WiringDiagram end = replay_checked(w, homotopy_to_pencil(w));
  CHECK(end == WiringDiagram{8, {Letter::multi(1, 8)}});
}

TEST_CASE("find_wirable_order solves small arrangements") {
  auto tri = find_wirable_order(triangle());
  REQUIRE(tri.has_value());
  CHECK_NOTHROW(from_arrangement(triangle(), tri->first, tri->second));

  auto quad = find_wirable_order(two_pencil(2, 1, 1));
  REQUIRE(quad.has_value());
  CHECK(quad->first == std::vector<int>{0, 1, 2, 3});
  CHECK(quad->second == std::vector<int>{0, 1, 3, 2, 5, 4});
  WiringDiagram w =
      from_arrangement(two_pencil(2, 1, 1), quad->first, quad->second);
  CHECK(format_word(w) == "n=4; t1 t3 t2 t3 t1 t2");

  CHECK_THROWS_AS(find_wirable_order(projective_plane(3)), ArrangementError);
}

TEST_CASE("the seven-line and eight-line configurations are not wirable") {
  CHECK_FALSE(find_wirable_order(projective_plane(2)).has_value());

  auto found = search_nk(8, 3);
  REQUIRE(found.size() == 1);
  CHECK_FALSE(find_wirable_order(found.front()).has_value());
}

TEST_CASE("word text form parses back to the same diagram") {
  CHECK(format_word(canonical_word(4)) == "n=4; t1 t2 t3 t1 t2 t1");
  CHECK(parse_word("n=4; t1 t2 t3 t1 t2 t1") == canonical_word(4));
  CHECK(parse_word("  n=3;   t1  t2 t1 ") == canonical_word(3));
  CHECK(parse_word("n=1;") == WiringDiagram{1, {}});

  std::string big =
      "n=8; m(1,4) t4 t3 t2 t1 t5 t4 t3 t2 t6 t5 t4 t3 t7 t6 t5 t4 m(1,4)";
  CHECK(format_word(parse_word(big)) == big);

  CHECK_THROWS_AS(parse_word("t1 t2 t1"), InvalidDiagram);
  CHECK_THROWS_AS(parse_word("n=x; t1"), InvalidDiagram);
  CHECK_THROWS_AS(parse_word("n=3 t1 t2 t1"), InvalidDiagram);
  CHECK_THROWS_AS(parse_word("n=3; q1"), InvalidDiagram);
  CHECK_THROWS_AS(parse_word("n=3; t1t2"), InvalidDiagram);
  CHECK_THROWS_AS(parse_word("n=3; m(1,2) t1"), InvalidDiagram);
  CHECK_THROWS_AS(parse_word("n=3; t9"), InvalidDiagram);
  CHECK_THROWS_AS(parse_word("n=2;"), InvalidDiagram);
}

TEST_CASE("svg output is deterministic and draws every wire") {
  WiringDiagram w = parse_word(
      "n=8; m(1,4) t4 t3 t2 t1 t5 t4 t3 t2 t6 t5 t4 t3 t7 t6 t5 t4 m(1,4)");
  std::string svg = to_svg(w);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  size_t wires = 0, dots = 0;
  for (size_t p = svg.find("<polyline"); p != std::string::npos;
       p = svg.find("<polyline", p + 1))
    ++wires;
  for (size_t p = svg.find("<circle"); p != std::string::npos;
       p = svg.find("<circle", p + 1))
    ++dots;
  CHECK(wires == 8);
  CHECK(dots == 2);  // the two multipoints
  CHECK(to_svg(w) == svg);
  CHECK(to_svg(canonical_word(2)).find("<circle") == std::string::npos);
}
