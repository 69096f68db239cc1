/**
 * @file tangle.hpp
 * @brief Closed framed diagrams as sliced (Morse) presentations, and their
 * evaluation through the ribbon structure on M.
 *
 * A sliced diagram is read bottom to top. Each event acts on the current row
 * of k strands, positions 1-based:
 *   cup p   inserts a new pair so its left strand becomes strand p (k -> k+2)
 *   cap p   joins strands p and p+1 (k -> k-2)
 *   pos p   crossing of strands p, p+1; the strand entering at p goes over
 *   neg p   the opposite crossing
 * Framing is the blackboard framing of the drawn diagram.
 */

#pragma once

#include "dx/ring.hpp"
#include "dx/rmatrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dx {

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +-k: (inverse) crossing of strands k, k+1

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// `n: l1 l2 ...`, e.g. `3: 1 -2 1 -2`. Letters must satisfy 1 <= |l| < n.
BraidWord parse_braid(std::string_view text);
std::string to_string(const BraidWord& b);
/// All letters negated.
BraidWord mirror(const BraidWord& b);

enum class EventKind { cup, cap, pos, neg };

struct Event {
  EventKind kind;
  int position;

  friend bool operator==(const Event&, const Event&) = default;
};

class SlicedDiagram {
 public:
  SlicedDiagram() = default;
  /// Validates every position against the running strand count; throws
  /// DiagramError on an impossible event.
  explicit SlicedDiagram(std::vector<Event> events);

  const std::vector<Event>& events() const { return events_; }
  /// Strand count before the first event and after each event.
  const std::vector<int>& profile() const { return profile_; }
  int peak() const;
  int final_strands() const { return profile_.back(); }
  bool closed() const { return final_strands() == 0; }
  std::size_t crossings() const;

 private:
  std::vector<Event> events_;
  std::vector<int> profile_{0};
};

/// Text format: one `kind position` per line, `#` starts a comment.
SlicedDiagram parse_sliced(std::string_view text);
std::string to_string(const SlicedDiagram& d);

/// Trace closure: n nested cups, the braid on strands n+1..2n, n nested caps.
SlicedDiagram braid_closure_slices(const BraidWord& b);

struct EvalStats {
  std::size_t slices = 0;
  int peak_strands = 0;
  std::size_t peak_terms = 0;  // largest number of nonzero state coefficients
};

struct EvalResult {
  IntLaurent value;
  EvalStats stats;
};

/// Folds the event list over a sparse state vector in M^{(x)k}, applying b,
/// d, c and c^{-1} at the indicated positions. Throws DiagramError if the
/// diagram is not closed.
EvalResult evaluate_sliced(const SlicedDiagram& d, const Category& cat = standard_category());

EvalResult invariant(const BraidWord& b, const Category& cat = standard_category());

}  // namespace dx
