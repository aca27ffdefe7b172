#pragma once

// Semistandard tableaux: Schensted row insertion, column insertion and its
// inverse (column-unbumping), the tableau product, superstandard tableaux,
// horizontal-band descents of standard tableaux and Littlewood-Richardson
// coefficients.

#include <cstdint>
#include <span>
#include <vector>

#include "ssot/shapes.hpp"

namespace ssot {

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase, entries are positive.
class Tableau {
 public:
  using Rows = std::vector<std::vector<int>>;

  Tableau() = default;
  /// Throws std::invalid_argument unless the rows form an SSYT.
  explicit Tableau(Rows rows);

  const Rows& rows() const noexcept { return rows_; }
  Partition shape() const;
  int size() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }

  /// Entry at a 1-based box; the box must be inside the shape.
  int at(Box b) const;

  /// Row word: bottom row first, each row left to right.
  std::vector<int> row_word() const;
  /// Weight vector: entry i counts occurrences of letter i+1.
  std::vector<int> weight() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  Rows rows_;
};

/// True iff rows are those of a semistandard tableau (partition shape).
bool is_semistandard(const Tableau::Rows& rows);

struct Insertion {
  Tableau tableau;
  Box box;  ///< the box added by the insertion
};

struct Unbumping {
  Tableau tableau;
  int value;  ///< the letter ejected from the first column
};

/// Schensted row insertion x -> T.
Insertion row_insert(const Tableau& t, int x);

/// Column insertion x -> T: in each column bump the smallest entry >= x into
/// the next column; append at the bottom when none exists.
Insertion column_insert(const Tableau& t, int x);

/// Cu(T, B) and cu(T, B): remove the entry at corner B and push it leftward by
/// reverse column insertion (replace the largest entry <= x in the previous
/// column). Throws std::invalid_argument if B is not a removable corner.
Unbumping column_unbump(const Tableau& t, Box b);

/// Insertion tableau P(w) of a word under row insertion.
Tableau insertion_tableau(std::span<const int> word);

/// Tableau product T1 · T2: row-insert the row word of T2 into T1.
Tableau product(const Tableau& t1, const Tableau& t2);

/// U(lambda): row i filled with i.
Tableau superstandard(const Partition& lambda);

/// Every suffix of w has a partition as its weight.
bool is_reverse_yamanouchi(std::span<const int> w);

/// A filling of a skew shape nu/inner. Cells of `inner` hold 0.
struct SkewTableau {
  Partition inner;
  Tableau::Rows rows;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

/// All LR tableaux of shape nu/lambda and weight mu.
std::vector<SkewTableau> lr_tableaux(const Partition& lambda, const Partition& mu,
                                     const Partition& nu);

/// c^nu_{lambda mu}; 0 unless lambda, mu ⊆ nu and |nu| = |lambda| + |mu|.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu);

bool is_standard(const Tableau& t);

/// Sizes of the maximal standard horizontal bands of a standard tableau.
/// Throws std::invalid_argument if t is not standard.
std::vector<int> standard_horizontal_bands(const Tableau& t);
Composition des_syt(const Tableau& t);
int step_syt(const Tableau& t);

/// All SSYT of the given shape with entries <= max_entry, in lexicographic
/// order of rows.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);
/// All standard tableaux of the given shape.
std::vector<Tableau> enumerate_syt(const Partition& shape);

/// Number of standard tableaux of the given shape (hook length formula).
std::int64_t count_syt(const Partition& shape);

}  // namespace ssot
