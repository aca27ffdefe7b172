#pragma once

// Partitions, compositions and boxes, plus the shape-level operations built on
// them: conjugation, refinement, strips, dominance and the even-strip closure
// V^n(lambda).

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace ssot {

/// A cell position in a Young diagram, 1-based (row 1 is the top row).
struct Box {
  int row = 1;
  int col = 1;

  auto operator<=>(const Box&) const = default;
};

/// B1 <_nE B2: B2 lies weakly above and strictly right of B1.
constexpr bool north_east_less(Box b1, Box b2) noexcept {
  return b1.row >= b2.row && b1.col < b2.col;
}

/// Weakly decreasing sequence of positive integers, stored without trailing
/// zeros. The empty partition has size 0.
class Partition {
 public:
  Partition() = default;
  /// Accepts trailing zeros (they are dropped); throws std::invalid_argument
  /// on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 0-based part access, zero-padded past the end.
  int part(std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  bool contains(Box b) const noexcept {
    return b.row >= 1 && b.col >= 1 && b.col <= part(b.row - 1);
  }
  /// Diagram containment: other ⊆ *this.
  bool contains(const Partition& other) const noexcept;

  Partition with_box(Box b) const;
  Partition without_box(Box b) const;

  /// Boxes whose addition keeps a partition shape, by increasing row.
  std::vector<Box> addable_boxes() const;
  /// Corner boxes whose removal keeps a partition shape, by increasing row.
  std::vector<Box> removable_boxes() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Finite sequence of nonnegative integers. Storage keeps trailing zeros but
/// equality and ordering ignore them.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool is_strong() const noexcept;
  /// Copy with trailing zeros removed.
  Composition trimmed() const;

  /// Compact form for single-digit parts ("221"), else "(12,1)".
  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b);
  friend std::strong_ordering operator<=>(const Composition& a,
                                          const Composition& b);

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

Partition conjugate(const Partition& lambda);
bool is_even_partition(const Partition& lambda);

/// Drops all zero parts.
Composition flat(const Composition& c);

/// True iff b splits into consecutive blocks summing to a_1, ..., a_m.
/// Both must be strong; throws std::invalid_argument otherwise.
bool refines(const Composition& b, const Composition& a);

/// All strong refinements of a, descending lexicographic order.
std::vector<Composition> ref_set(const Composition& a);

/// mu <= lambda in dominance order. Throws std::invalid_argument when sizes
/// differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

bool is_horizontal_strip(const Partition& inner, const Partition& outer);
bool is_vertical_strip(const Partition& inner, const Partition& outer);

/// n in N(lambda): n >= |lambda| and n ≡ |lambda| (mod 2).
constexpr bool admissible_length(int lambda_size, int n) noexcept {
  return n >= lambda_size && (n - lambda_size) % 2 == 0;
}
inline bool admissible_length(const Partition& lambda, int n) noexcept {
  return admissible_length(lambda.size(), n);
}

/// All partitions of m, descending lexicographic order.
std::vector<Partition> partitions_of(int m);

/// All outer partitions nu with nu/inner a horizontal strip of `added` boxes,
/// descending lexicographic order.
std::vector<Partition> add_horizontal_strips(const Partition& inner, int added);
/// All inner partitions mu with outer/mu a horizontal strip (any size),
/// descending lexicographic order.
std::vector<Partition> remove_horizontal_strips(const Partition& outer);
/// All nu with nu/inner a vertical strip of exactly `added` boxes.
std::vector<Partition> add_vertical_strips(const Partition& inner, int added);

/// V^n(lambda): shapes of size n reachable from lambda by adding vertical
/// strips of positive even size. Empty when n is not admissible.
std::vector<Partition> v_set(const Partition& lambda, int n);

/// The dominance maximum of V^n(lambda): (lambda_1 + r, lambda_2 + r,
/// lambda_3, ...) with n = |lambda| + 2r. Throws std::domain_error when n is
/// not admissible.
Partition lambda_bar(const Partition& lambda, int n);

}  // namespace ssot
