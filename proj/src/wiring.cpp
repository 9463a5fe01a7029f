#include "arrange/wiring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace arrange {

namespace {

std::string letter_text(const Letter& l) {
  if (l.is_cross()) return "t" + std::to_string(l.i);
  return "m(" + std::to_string(l.i) + "," + std::to_string(l.k) + ")";
}

void check_letter_range(int n, const Letter& l, int pos) {
  if (l.k < 2)
    throw InvalidDiagram("letter " + std::to_string(pos) + " has block size " +
                         std::to_string(l.k) + " (need at least 2)");
  if (l.i < 1 || l.i + l.k - 1 > n)
    throw InvalidDiagram("letter " + std::to_string(pos) + " (" +
                         letter_text(l) + ") is out of range for n = " +
                         std::to_string(n));
}

// Wires currently at heights i .. i+k-1 reverse their order.
void reverse_block(std::vector<int>& wire_at, const Letter& l) {
  std::reverse(wire_at.begin() + (l.i - 1), wire_at.begin() + (l.i + l.k - 1));
}

}  // namespace

void check_diagram(const WiringDiagram& w) {
  if (w.n < 1) throw InvalidDiagram("diagram needs at least one wire");
  const int n = w.n;
  std::vector<int> wire_at(n);           // height (0-based) -> wire label (1-based)
  std::iota(wire_at.begin(), wire_at.end(), 1);
  std::vector<bool> crossed(static_cast<size_t>(n) * n, false);
  long long total = 0;
  for (size_t pos = 0; pos < w.word.size(); ++pos) {
    const Letter& l = w.word[pos];
    check_letter_range(n, l, static_cast<int>(pos));
    for (int a = l.i - 1; a < l.i + l.k - 1; ++a)
      for (int b = a + 1; b < l.i + l.k - 1; ++b) {
        int x = wire_at[a], y = wire_at[b];
        if (x > y) std::swap(x, y);
        size_t slot = static_cast<size_t>(x - 1) * n + (y - 1);
        if (crossed[slot])
          throw InvalidDiagram("wires " + std::to_string(x) + " and " +
                               std::to_string(y) + " cross again at letter " +
                               std::to_string(pos));
        crossed[slot] = true;
        ++total;
      }
    reverse_block(wire_at, l);
  }
  if (total != static_cast<long long>(n) * (n - 1) / 2)
    for (int x = 1; x <= n; ++x)
      for (int y = x + 1; y <= n; ++y)
        if (!crossed[static_cast<size_t>(x - 1) * n + (y - 1)])
          throw InvalidDiagram("wires " + std::to_string(x) + " and " +
                               std::to_string(y) + " never cross");
  for (int h = 0; h < n; ++h)
    if (wire_at[h] != n - h)
      throw InvalidDiagram("final order is not reversed at height " +
                           std::to_string(h + 1));
}

std::vector<std::vector<std::pair<int, int>>> letter_pairs(
    const WiringDiagram& w) {
  if (w.n < 1) throw InvalidDiagram("diagram needs at least one wire");
  std::vector<int> wire_at(w.n);
  std::iota(wire_at.begin(), wire_at.end(), 1);
  std::vector<std::vector<std::pair<int, int>>> out;
  out.reserve(w.word.size());
  for (size_t pos = 0; pos < w.word.size(); ++pos) {
    const Letter& l = w.word[pos];
    check_letter_range(w.n, l, static_cast<int>(pos));
    std::vector<std::pair<int, int>> pairs;
    for (int a = l.i - 1; a < l.i + l.k - 1; ++a)
      for (int b = a + 1; b < l.i + l.k - 1; ++b) {
        int x = wire_at[a], y = wire_at[b];
        if (x > y) std::swap(x, y);
        pairs.emplace_back(x, y);
      }
    std::sort(pairs.begin(), pairs.end());
    out.push_back(std::move(pairs));
    reverse_block(wire_at, l);
  }
  return out;
}

WiringDiagram canonical_word(int n) {
  if (n < 2) throw InvalidDiagram("canonical word needs at least two wires");
  std::vector<int> height_of(n + 1);  // wire label -> height, 1-based
  std::iota(height_of.begin(), height_of.end(), 0);
  WiringDiagram w{n, {}};
  w.word.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int a = 1; a <= n - 1; ++a)
    for (int b = a + 1; b <= n; ++b) {
      int ha = height_of[a], hb = height_of[b];
      if (hb != ha + 1)
        throw std::logic_error("dictionary-order crossing is not adjacent");
      w.word.push_back(Letter::cross(ha));
      std::swap(height_of[a], height_of[b]);
    }
  return w;
}

WiringDiagram apply_move(const WiringDiagram& w, const HomotopyEvent& e) {
  const int pos = e.position;
  const int len = static_cast<int>(w.word.size());
  auto need_cross = [&](int at) -> int {
    if (at < 0 || at >= len)
      throw MoveNotApplicable(pos, "word index " + std::to_string(at) +
                                       " is out of range");
    if (!w.word[at].is_cross())
      throw MoveNotApplicable(pos, "letter " + std::to_string(at) +
                                       " is a multipoint");
    return w.word[at].i;
  };
  WiringDiagram out = w;
  switch (e.kind) {
    case HomotopyEvent::Kind::BraidMove1: {
      int a = need_cross(pos), b = need_cross(pos + 1), c = need_cross(pos + 2);
      if (c != a || std::abs(a - b) != 1)
        throw MoveNotApplicable(
            pos, "pattern t" + std::to_string(a) + " t" + std::to_string(b) +
                     " t" + std::to_string(c) + " is not a braid triple");
      out.word[pos] = Letter::cross(b);
      out.word[pos + 1] = Letter::cross(a);
      out.word[pos + 2] = Letter::cross(b);
      return out;
    }
    case HomotopyEvent::Kind::BraidMove2: {
      int a = need_cross(pos), b = need_cross(pos + 1);
      if (std::abs(a - b) < 2)
        throw MoveNotApplicable(pos, "crossings t" + std::to_string(a) +
                                         " and t" + std::to_string(b) +
                                         " do not commute");
      std::swap(out.word[pos], out.word[pos + 1]);
      return out;
    }
    case HomotopyEvent::Kind::SplitMulti: {
      if (pos < 0 || pos >= len)
        throw MoveNotApplicable(pos, "word index is out of range");
      const Letter& l = w.word[pos];
      if (l.is_cross())
        throw MoveNotApplicable(pos, "letter is not a multipoint");
      WiringDiagram block = canonical_word(l.k);
      out.word.erase(out.word.begin() + pos);
      for (int t = static_cast<int>(block.word.size()) - 1; t >= 0; --t)
        out.word.insert(out.word.begin() + pos,
                        Letter::cross(block.word[t].i + l.i - 1));
      return out;
    }
    case HomotopyEvent::Kind::MergeMulti: {
      if (e.k < 3)
        throw MoveNotApplicable(pos, "multipoint size must be at least 3");
      const int blen = e.k * (e.k - 1) / 2;
      if (pos < 0 || pos + blen > len)
        throw MoveNotApplicable(pos, "word is too short for a block of size " +
                                         std::to_string(e.k));
      int base = need_cross(pos);
      WiringDiagram block = canonical_word(e.k);
      for (int t = 0; t < blen; ++t) {
        int want = block.word[t].i + base - 1;
        int got = need_cross(pos + t);
        if (got != want)
          throw MoveNotApplicable(
              pos, "letter " + std::to_string(pos + t) + " is t" +
                       std::to_string(got) + ", expected t" +
                       std::to_string(want) +
                       " of the dictionary-order block");
      }
      out.word.erase(out.word.begin() + pos, out.word.begin() + pos + blen);
      out.word.insert(out.word.begin() + pos, Letter::multi(base, e.k));
      return out;
    }
    case HomotopyEvent::Kind::PlanarIsotopy:
      return out;
  }
  throw MoveNotApplicable(pos, "unknown move kind");
}

WiringDiagram replay(WiringDiagram w, const std::vector<HomotopyEvent>& events) {
  for (const HomotopyEvent& e : events) w = apply_move(w, e);
  return w;
}

namespace {

// Rewrites word[from..] by braid moves so that it starts with crossing s.
// Requires word[from..] to be a reduced crossing sequence whose remaining
// task includes an initial s-crossing (always true along the dictionary
// order peel in canonicalize()).  Appends the moves performed.
void make_first(std::vector<Letter>& word, int from, int s,
                std::vector<HomotopyEvent>& moves) {
  if (from >= static_cast<int>(word.size()))
    throw std::logic_error("make_first ran past the end of the word");
  if (word[from].i == s) return;
  const int t = word[from].i;
  make_first(word, from + 1, s, moves);
  if (std::abs(s - t) >= 2) {
    moves.push_back({HomotopyEvent::Kind::BraidMove2, from, 0, {}});
    std::swap(word[from], word[from + 1]);
  } else {
    make_first(word, from + 2, t, moves);
    moves.push_back({HomotopyEvent::Kind::BraidMove1, from, 0, {}});
    word[from] = Letter::cross(s);
    word[from + 1] = Letter::cross(t);
    word[from + 2] = Letter::cross(s);
  }
}

}  // namespace

std::pair<WiringDiagram, std::vector<HomotopyEvent>> canonicalize(
    const WiringDiagram& w) {
  check_diagram(w);
  for (size_t pos = 0; pos < w.word.size(); ++pos)
    if (!w.word[pos].is_cross())
      throw InvalidDiagram("letter " + std::to_string(pos) +
                           " is a multipoint; split multipoints first");
  if (w.n < 2) return {w, {}};
  const WiringDiagram canon = canonical_word(w.n);
  WiringDiagram cur = w;
  std::vector<HomotopyEvent> moves;
  for (int m = 0; m < static_cast<int>(canon.word.size()); ++m)
    make_first(cur.word, m, canon.word[m].i, moves);
  if (cur != canon)
    throw std::logic_error("canonicalization did not reach the target word");
  return {cur, moves};
}

std::vector<HomotopyEvent> homotopy_to_pencil(const WiringDiagram& w) {
  check_diagram(w);
  std::vector<HomotopyEvent> events;
  WiringDiagram cur = w;
  for (;;) {
    int p = -1;
    for (size_t t = 0; t < cur.word.size(); ++t)
      if (!cur.word[t].is_cross()) {
        p = static_cast<int>(t);
        break;
      }
    if (p < 0) break;
    HomotopyEvent e{HomotopyEvent::Kind::SplitMulti, p, 0, {}};
    cur = apply_move(cur, e);
    events.push_back(std::move(e));
  }
  auto [canon, moves] = canonicalize(cur);
  events.insert(events.end(), moves.begin(), moves.end());
  cur = std::move(canon);
  if (w.n >= 3) {
    HomotopyEvent merge{HomotopyEvent::Kind::MergeMulti, 0, w.n, {}};
    cur = apply_move(cur, merge);
    events.push_back(std::move(merge));
  }
  return events;
}

namespace {

void check_permutation(const std::vector<int>& v, int size, const char* what) {
  if (static_cast<int>(v.size()) != size)
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           std::string(what) + " must list all " +
                               std::to_string(size) + " indices",
                           static_cast<int>(v.size()));
  std::vector<bool> seen(size, false);
  for (int x : v) {
    if (x < 0 || x >= size || seen[x])
      throw ArrangementError(ArrangementError::Kind::BadParameter,
                             std::string(what) + " is not a permutation", x);
    seen[x] = true;
  }
}

}  // namespace

WiringDiagram from_arrangement(const Arrangement& arr,
                               const std::vector<int>& line_order,
                               const std::vector<int>& point_order) {
  const int n = arr.lines();
  check_permutation(line_order, n, "line order");
  check_permutation(point_order, arr.points(), "point order");
  std::vector<int> height_of(n);  // line -> height, 0-based
  std::vector<int> line_at(n);    // height -> line
  for (int h = 0; h < n; ++h) {
    line_at[h] = line_order[h];
    height_of[line_order[h]] = h;
  }
  WiringDiagram w{n, {}};
  w.word.reserve(point_order.size());
  for (int q : point_order) {
    const std::vector<int>& ls = arr.lines_through(q);
    int lo = n, hi = -1;
    for (int l : ls) {
      lo = std::min(lo, height_of[l]);
      hi = std::max(hi, height_of[l]);
    }
    const int m = static_cast<int>(ls.size());
    if (hi - lo + 1 != m)
      throw NotWirable("lines through point " + std::to_string(q) +
                       " are not at adjacent heights");
    w.word.push_back({lo + 1, m});
    std::reverse(line_at.begin() + lo, line_at.begin() + hi + 1);
    for (int h = lo; h <= hi; ++h) height_of[line_at[h]] = h;
  }
  check_diagram(w);  // guaranteed: every line pair meets in exactly one point
  return w;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_wirable_order(
    const Arrangement& arr) {
  const int n = arr.lines();
  if (n > 8)
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "order search supports at most 8 lines", n);
  const int np = arr.points();
  std::vector<int> line_order(n);
  std::iota(line_order.begin(), line_order.end(), 0);
  std::vector<int> height_of(n), line_at(n), point_order;
  std::vector<bool> used(np, false);

  auto dfs = [&](auto&& self, int done) -> bool {
    if (done == np) return true;
    for (int q = 0; q < np; ++q) {
      if (used[q]) continue;
      const std::vector<int>& ls = arr.lines_through(q);
      int lo = n, hi = -1;
      for (int l : ls) {
        lo = std::min(lo, height_of[l]);
        hi = std::max(hi, height_of[l]);
      }
      if (hi - lo + 1 != static_cast<int>(ls.size())) continue;
      used[q] = true;
      point_order.push_back(q);
      std::reverse(line_at.begin() + lo, line_at.begin() + hi + 1);
      for (int h = lo; h <= hi; ++h) height_of[line_at[h]] = h;
      if (self(self, done + 1)) return true;
      std::reverse(line_at.begin() + lo, line_at.begin() + hi + 1);
      for (int h = lo; h <= hi; ++h) height_of[line_at[h]] = h;
      point_order.pop_back();
      used[q] = false;
    }
    return false;
  };

  do {
    for (int h = 0; h < n; ++h) {
      line_at[h] = line_order[h];
      height_of[line_order[h]] = h;
    }
    point_order.clear();
    if (dfs(dfs, 0)) return std::make_pair(line_order, point_order);
  } while (std::next_permutation(line_order.begin(), line_order.end()));
  return std::nullopt;
}

std::string format_word(const WiringDiagram& w) {
  std::string out = "n=" + std::to_string(w.n) + ";";
  for (const Letter& l : w.word) out += " " + letter_text(l);
  return out;
}

WiringDiagram parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  if (!(in >> head) || head.size() < 3 || head.compare(0, 2, "n=") != 0 ||
      head.back() != ';')
    throw InvalidDiagram("word must start with \"n=<count>;\"");
  WiringDiagram w;
  try {
    size_t used = 0;
    w.n = std::stoi(head.substr(2, head.size() - 3), &used);
    if (used != head.size() - 3) throw std::invalid_argument(head);
  } catch (const std::exception&) {
    throw InvalidDiagram("bad wire count in \"" + head + "\"");
  }
  std::string tok;
  while (in >> tok) {
    Letter l;
    int consumed = 0;
    if (std::sscanf(tok.c_str(), "t%d%n", &l.i, &consumed) == 1 &&
        consumed == static_cast<int>(tok.size())) {
      l.k = 2;
    } else if (std::sscanf(tok.c_str(), "m(%d,%d)%n", &l.i, &l.k, &consumed) ==
                   2 &&
               consumed == static_cast<int>(tok.size())) {
      if (l.k < 3)
        throw InvalidDiagram("multipoint \"" + tok +
                             "\" needs size at least 3");
    } else {
      throw InvalidDiagram("unrecognized letter \"" + tok + "\"");
    }
    w.word.push_back(l);
  }
  check_diagram(w);
  return w;
}

std::string to_svg(const WiringDiagram& w) {
  check_diagram(w);
  const int colw = 48, rowh = 32, margin = 24;
  const int len = static_cast<int>(w.word.size());
  const int width = 2 * margin + colw * std::max(len, 1);
  const int height = 2 * margin + rowh * (w.n - 1);
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  const int ncolors = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));

  // Height of every wire after each letter.
  std::vector<std::vector<int>> at(len + 1, std::vector<int>(w.n));
  std::iota(at[0].begin(), at[0].end(), 1);
  std::vector<int> wire_at(w.n);
  std::iota(wire_at.begin(), wire_at.end(), 1);
  for (int c = 0; c < len; ++c) {
    reverse_block(wire_at, w.word[c]);
    for (int h = 0; h < w.n; ++h) at[c + 1][wire_at[h] - 1] = h + 1;
  }

  auto y_of = [&](int h) { return margin + (h - 1) * rowh; };
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(width) + "\" height=\"" + std::to_string(height) +
      "\" viewBox=\"0 0 " + std::to_string(width) + " " +
      std::to_string(height) + "\">\n";
  for (int wire = 1; wire <= w.n; ++wire) {
    svg += "  <polyline fill=\"none\" stroke=\"";
    svg += kPalette[(wire - 1) % ncolors];
    svg += "\" stroke-width=\"2\" points=\"";
    for (int c = 0; c <= len; ++c) {
      if (c) svg += " ";
      svg += std::to_string(margin + c * colw) + "," +
             std::to_string(y_of(at[c][wire - 1]));
    }
    if (len == 0)
      svg += " " + std::to_string(width - margin) + "," +
             std::to_string(y_of(at[len][wire - 1]));
    svg += "\"/>\n";
  }
  for (int c = 0; c < len; ++c) {
    const Letter& l = w.word[c];
    if (l.is_cross()) continue;
    int cx = margin + c * colw + colw / 2;
    int cy = margin + (2 * l.i + l.k - 3) * rowh / 2;
    svg += "  <circle cx=\"" + std::to_string(cx) + "\" cy=\"" +
           std::to_string(cy) + "\" r=\"5\" fill=\"black\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace arrange
