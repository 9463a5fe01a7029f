#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrange/arrangement.hpp"

namespace arrange {

// A diagram that breaks the wiring rules (a wire pair crossing twice or
// never, a letter out of range, ...).
class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The supplied line/point order cannot be drawn as a wiring diagram: some
// point's lines are not adjacent when the point is reached.
class NotWirable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rewriting move whose pattern does not match at the given position.
class MoveNotApplicable : public std::invalid_argument {
 public:
  MoveNotApplicable(int position, const std::string& reason)
      : std::invalid_argument("move at position " + std::to_string(position) +
                              ": " + reason),
        position(position) {}
  int position;
};

// One column of a wiring diagram: the k wires at heights i .. i+k-1 meet in
// a point and reverse.  k = 2 is a plain crossing, k >= 3 a multipoint.
struct Letter {
  int i = 1;  // topmost height of the block, 1-based
  int k = 2;  // block size
  static Letter cross(int i) { return {i, 2}; }
  static Letter multi(int i, int k) { return {i, k}; }
  bool is_cross() const { return k == 2; }
  bool operator==(const Letter&) const = default;
};

// n wires entering at heights 1..n and leaving in reversed order, with the
// word listing the crossings and multipoints left to right.  Valid diagrams
// cross every unordered wire pair exactly once (a multipoint of size k
// counts as its k(k-1)/2 pairs).
struct WiringDiagram {
  int n = 0;
  std::vector<Letter> word;
  bool operator==(const WiringDiagram&) const = default;
};

// Checks letter ranges and the exactly-once crossing rule (which forces the
// end order to be the reversal).  Throws InvalidDiagram.
void check_diagram(const WiringDiagram& w);

// Wire pairs (1-based labels, smaller first) crossed by each letter, each
// letter's list sorted lexicographically.
std::vector<std::vector<std::pair<int, int>>> letter_pairs(
    const WiringDiagram& w);

// The all-crossings diagram whose pair sequence is in dictionary order
// (1,2), (1,3), ..., (n-1,n).  Throws InvalidDiagram for n < 2.
WiringDiagram canonical_word(int n);

// A local rewriting step on a word.
struct HomotopyEvent {
  enum class Kind {
    BraidMove1,     // t_a t_b t_a -> t_b t_a t_b at |a-b| = 1
    BraidMove2,     // t_a t_b -> t_b t_a at |a-b| > 1
    SplitMulti,     // Multi(i,k) -> the dictionary-order staircase block
    MergeMulti,     // the staircase block of size k -> Multi(i,k)
    PlanarIsotopy,  // bookkeeping only; identity on the word
  };
  Kind kind = Kind::PlanarIsotopy;
  int position = 0;      // word index where the pattern starts
  int k = 0;             // block size, MergeMulti only
  std::string description;  // PlanarIsotopy only
  bool operator==(const HomotopyEvent&) const = default;
};

// Applies one move.  Only the local pattern is checked (so words that are
// fragments of larger diagrams can be rewritten too); every move preserves
// the crossing multiset, hence maps valid diagrams to valid diagrams.
// Throws MoveNotApplicable.
WiringDiagram apply_move(const WiringDiagram& w, const HomotopyEvent& e);

// Folds apply_move over the whole list.
WiringDiagram replay(WiringDiagram w, const std::vector<HomotopyEvent>& events);

// Braid-move certificate from a crossings-only diagram to canonical_word(n).
// The result's first member always equals canonical_word(w.n); replaying the
// second member from w reproduces it.  Throws InvalidDiagram when w is not a
// valid crossings-only diagram.
std::pair<WiringDiagram, std::vector<HomotopyEvent>> canonicalize(
    const WiringDiagram& w);

// Full homotopy certificate to the pencil: split every multipoint, apply the
// canonicalization moves, and collapse the dictionary-order block into the
// single multipoint [Multi(1,n)] (for n = 2 the one-crossing diagram is
// already the pencil).  Replaying the list from w yields that diagram.
std::vector<HomotopyEvent> homotopy_to_pencil(const WiringDiagram& w);

// Wiring diagram of an arrangement, given the initial top-to-bottom line
// order (wire h+1 is line line_order[h]) and the left-to-right order of
// point encounters.  Each point's lines must sit at adjacent heights when
// the point is reached; otherwise NotWirable.  Throws ArrangementError for
// non-permutation inputs.
WiringDiagram from_arrangement(const Arrangement& arr,
                               const std::vector<int>& line_order,
                               const std::vector<int>& point_order);

// Exhaustive search (arrangements of at most 8 lines) for a line order and
// point order that from_arrangement accepts; nullopt when none exists,
// which certifies the arrangement has no wiring-diagram presentation.
// Throws ArrangementError for more than 8 lines.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_wirable_order(
    const Arrangement& arr);

// Text form "n=4; t1 t3 m(2,3) t1" (t = crossing, m(i,k) = multipoint).
std::string format_word(const WiringDiagram& w);

// Inverse of format_word; validates the diagram.  Throws InvalidDiagram.
WiringDiagram parse_word(const std::string& text);

// Stand-alone SVG picture of the diagram (wires as polylines through the
// event columns); a deterministic debugging aid.
std::string to_svg(const WiringDiagram& w);

}  // namespace arrange
