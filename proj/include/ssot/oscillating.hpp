#pragma once

// Oscillating tableaux (OT) and semistandard oscillating tableaux (SSOT).
//
// An SSOT with k steps is stored as the pairs (S'^i, S^i), i = 1..k, with
// S'^1 = ∅. Step i deletes the horizontal strip S^{i-1}/S'^i and then adds the
// horizontal strip S^i/S'^i; every deleted or added box carries letter i.
// Within a step, deletions are read right to left and additions left to right,
// which fixes the canonical total order on the letters (the profile).

#include <span>
#include <string>
#include <vector>

#include "ssot/shapes.hpp"

namespace ssot {

enum class EventKind { addition, deletion };

/// Letters, boxes and kinds of a sequence of single-box moves from ∅.
struct EventTrace {
  std::vector<int> profile;
  std::vector<Box> boxes;
  std::vector<EventKind> kinds;

  std::size_t size() const noexcept { return profile.size(); }

  /// Shapes after each event, starting with ∅ (size() + 1 entries). Throws
  /// std::invalid_argument if some move is not legal.
  std::vector<Partition> replay() const;

  friend bool operator==(const EventTrace&, const EventTrace&) = default;
};

/// Lexicographic on (profile, boxes, kinds).
bool event_trace_less(const EventTrace& a, const EventTrace& b);

class OscillatingTableau {
 public:
  OscillatingTableau() : chain_{Partition{}} {}
  /// chain[0] must be ∅ and consecutive shapes must differ by one box.
  explicit OscillatingTableau(std::vector<Partition> chain);

  const std::vector<Partition>& chain() const noexcept { return chain_; }
  int length() const noexcept { return static_cast<int>(chain_.size()) - 1; }
  const Partition& shape() const noexcept { return chain_.back(); }

  /// Event trace with profile (1, ..., n).
  EventTrace events() const;

  friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;

 private:
  std::vector<Partition> chain_;
};

/// One step of an SSOT: delete down to `deleted`, then add up to `reached`.
struct SsotStep {
  Partition deleted;
  Partition reached;

  friend bool operator==(const SsotStep&, const SsotStep&) = default;
};

/// A box of the multiset-valued display tableau: the sorted letters recorded
/// at that position (first letter is an addition, then alternating).
using LetterRows = std::vector<std::vector<std::vector<int>>>;

class Ssot {
 public:
  Ssot() = default;
  /// Validates the step conditions and trims trailing steps that change
  /// nothing. Throws std::invalid_argument on malformed input.
  explicit Ssot(std::vector<SsotStep> steps);

  /// Builds the SSOT whose events are `trace`; letters must be weakly
  /// increasing and, within each letter, deletions (right to left) must
  /// precede additions (left to right).
  static Ssot from_events(const EventTrace& trace);
  /// Reads the multiset-valued tableau notation, e.g. {{{1},{1},{1,2}},{{2}}}.
  static Ssot from_letter_rows(const LetterRows& rows);
  /// Each move of the OT becomes its own step.
  static Ssot from_oscillating(const OscillatingTableau& o);

  const std::vector<SsotStep>& steps() const noexcept { return steps_; }
  /// step(S): index of the last step that changes the shape (0 when empty).
  int step_count() const noexcept { return static_cast<int>(steps_.size()); }
  int length() const noexcept { return length_; }
  Partition shape() const { return steps_.empty() ? Partition{} : steps_.back().reached; }

  LetterRows letter_rows() const;

  friend bool operator==(const Ssot&, const Ssot&) = default;

 private:
  std::vector<SsotStep> steps_;
  int length_ = 0;
};

/// Run: letters with bars after the 1-based positions in `bars`.
struct Run {
  std::vector<int> letters;
  std::vector<int> bars;

  /// E.g. "111|222233"; letters above 9 are separated by spaces.
  std::string to_string() const;

  friend bool operator==(const Run&, const Run&) = default;
};

struct DescentData {
  std::vector<int> descent_set;
  Composition des;
  int step = 0;
};

/// Events of S in canonical order: per step, deletions by decreasing column,
/// then additions by increasing column.
EventTrace substep_events(const Ssot& s);

/// Descent set, composition and step of an OT. A position j is a descent iff
/// (add, add) with not B_j <_nE B_{j+1}, or (add, delete), or (delete, delete)
/// with not B_{j+1} <_nE B_j.
DescentData descent_data(const OscillatingTableau& o);
/// Descent data of an SSOT, defined through its standardization.
DescentData descent_data(const Ssot& s);

/// Same descent rule applied directly to a trace.
std::vector<int> descent_positions(const EventTrace& trace);

OscillatingTableau standardize(const Ssot& s);
/// The unique quasi-Yamanouchi SSOT with the same standardization.
Ssot destandardize(const Ssot& s);
bool is_quasi_yamanouchi(const Ssot& s);

Run run_of(const Ssot& s);
Run run_of(const OscillatingTableau& o);

/// Weight of the profile: entry i counts letter i+1.
Composition com(const Ssot& s);

/// All OTs of the given shape and length, ordered by event trace.
std::vector<OscillatingTableau> enumerate_ot(const Partition& lambda, int n);
/// All SSOTs of shape lambda, length n and letters <= max_letter, ordered by
/// event trace.
std::vector<Ssot> enumerate_ssot(const Partition& lambda, int n, int max_letter);
/// Quasi-Yamanouchi SSOTs of shape lambda, length n and step <= max_step.
std::vector<Ssot> enumerate_qyot(const Partition& lambda, int n, int max_step);

}  // namespace ssot
