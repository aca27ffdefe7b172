#pragma once

// Two-row arrays, the Burge correspondence and the Sundaram correspondence
// between SSOT and pairs (Burge array, SSYT).

#include <vector>

#include "ssot/oscillating.hpp"
#include "ssot/tableaux.hpp"

namespace ssot {

struct BiLetter {
  int top = 1;
  int bottom = 1;

  auto operator<=>(const BiLetter&) const = default;
};

class TwoRowArray {
 public:
  TwoRowArray() = default;
  /// Pairs are kept as given; use is_lexicographic() to check the order.
  explicit TwoRowArray(std::vector<BiLetter> pairs);

  const std::vector<BiLetter>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Tops weakly increase, bottoms weakly increase within equal tops.
  bool is_lexicographic() const noexcept;
  /// Lexicographic and top > bottom in every pair.
  bool is_burge() const noexcept;

  /// The ⊕ operation: inserts after every pair <= p.
  void insert(BiLetter p);

  friend bool operator==(const TwoRowArray&, const TwoRowArray&) = default;

 private:
  std::vector<BiLetter> pairs_;
};

/// 2L: every (j, i) together with its mirror (i, j), sorted. Throws
/// std::invalid_argument if L is not lexicographic.
TwoRowArray symmetrize(const TwoRowArray& l);

/// Bur(L) = P(bottom word of 2L). Throws std::invalid_argument unless L is
/// Burge.
Tableau burge_map(const TwoRowArray& l);

struct SundaramPair {
  TwoRowArray burge;
  Tableau tableau;

  friend bool operator==(const SundaramPair&, const SundaramPair&) = default;
};

/// State after event m of the replay.
struct SundaramStep {
  int letter = 0;
  EventKind kind = EventKind::addition;
  Box box;
  int ejected = 0;  ///< cu value for deletions, 0 for additions
  Tableau tableau;
  TwoRowArray burge;
};

std::vector<SundaramStep> sundaram_trace(const Ssot& s);
SundaramPair sundaram(const Ssot& s);
/// Throws std::invalid_argument when the pair has no preimage.
Ssot sundaram_inverse(const SundaramPair& p);

/// All Burge arrays with `pairs` pairs and entries <= max_letter, sorted.
std::vector<TwoRowArray> enumerate_burge_arrays(int max_letter, int pairs);

}  // namespace ssot
