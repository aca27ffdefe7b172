#include "ssot/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ssot {

namespace {

using Rows = Tableau::Rows;

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

int column_height(const Rows& rows, std::size_t c) {
  int h = 0;
  while (static_cast<std::size_t>(h) < rows.size() &&
         rows[static_cast<std::size_t>(h)].size() > c)
    ++h;
  return h;
}

}  // namespace

bool is_semistandard(const Rows& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= 0) return false;
      if (c > 0 && row[c] < row[c - 1]) return false;
      if (r > 0 && row[c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

Tableau::Tableau(Rows rows) : rows_(std::move(rows)) {
  if (!is_semistandard(rows_))
    throw std::invalid_argument("rows do not form a semistandard tableau");
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const noexcept {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

int Tableau::at(Box b) const {
  if (b.row < 1 || idx(b.row) >= rows_.size() || b.col < 1 ||
      idx(b.col) >= rows_[idx(b.row)].size())
    throw std::out_of_range("box outside tableau");
  return rows_[idx(b.row)][idx(b.col)];
}

std::vector<int> Tableau::row_word() const {
  std::vector<int> w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::vector<int> Tableau::weight() const {
  std::vector<int> wt;
  for (const auto& row : rows_)
    for (int x : row) {
      if (static_cast<std::size_t>(x) > wt.size()) wt.resize(static_cast<std::size_t>(x), 0);
      ++wt[idx(x)];
    }
  return wt;
}

Insertion row_insert(const Tableau& t, int x) {
  if (x <= 0) throw std::invalid_argument("row_insert: letter must be positive");
  Rows rows = t.rows();
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return {Tableau(std::move(rows)), Box{static_cast<int>(r) + 1, 1}};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      const int col = static_cast<int>(row.size());
      return {Tableau(std::move(rows)), Box{static_cast<int>(r) + 1, col}};
    }
    std::swap(*it, x);
  }
}

Insertion column_insert(const Tableau& t, int x) {
  if (x <= 0) throw std::invalid_argument("column_insert: letter must be positive");
  Rows rows = t.rows();
  for (std::size_t c = 0;; ++c) {
    const int h = column_height(rows, c);
    int bumped_row = -1;
    for (int r = 0; r < h; ++r) {
      if (rows[static_cast<std::size_t>(r)][c] >= x) {
        bumped_row = r;
        break;
      }
    }
    if (bumped_row < 0) {
      const auto r = static_cast<std::size_t>(h);
      if (r == rows.size()) rows.emplace_back();
      rows[r].push_back(x);
      return {Tableau(std::move(rows)), Box{h + 1, static_cast<int>(c) + 1}};
    }
    std::swap(rows[static_cast<std::size_t>(bumped_row)][c], x);
  }
}

Unbumping column_unbump(const Tableau& t, Box b) {
  if (!t.shape().contains(b) || t.shape().part(idx(b.row) + 1) >= b.col ||
      t.shape().part(idx(b.row)) != b.col)
    throw std::invalid_argument("column_unbump: box is not a removable corner");
  Rows rows = t.rows();
  int x = rows[idx(b.row)].back();
  rows[idx(b.row)].pop_back();
  if (rows[idx(b.row)].empty()) rows.pop_back();
  for (int c = b.col - 2; c >= 0; --c) {
    const auto col = static_cast<std::size_t>(c);
    const int h = column_height(rows, col);
    int target = -1;
    for (int r = h - 1; r >= 0; --r) {
      if (rows[static_cast<std::size_t>(r)][col] <= x) {
        target = r;
        break;
      }
    }
    if (target < 0)
      throw std::logic_error("column_unbump: no entry to displace (invalid tableau)");
    std::swap(rows[static_cast<std::size_t>(target)][col], x);
  }
  return {Tableau(std::move(rows)), x};
}

Tableau insertion_tableau(std::span<const int> word) {
  Tableau p;
  for (int x : word) p = row_insert(p, x).tableau;
  return p;
}

Tableau product(const Tableau& t1, const Tableau& t2) {
  Tableau p = t1;
  for (int x : t2.row_word()) p = row_insert(p, x).tableau;
  return p;
}

Tableau superstandard(const Partition& lambda) {
  Rows rows;
  for (int i = 0; i < lambda.length(); ++i)
    rows.emplace_back(static_cast<std::size_t>(lambda.part(static_cast<std::size_t>(i))), i + 1);
  return Tableau(std::move(rows));
}

bool is_reverse_yamanouchi(std::span<const int> w) {
  std::vector<int> count;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int v = *it;
    if (v <= 0) return false;
    if (static_cast<std::size_t>(v) > count.size()) count.resize(static_cast<std::size_t>(v), 0);
    ++count[idx(v)];
    if (v > 1 && count[idx(v)] > count[idx(v - 1)]) return false;
  }
  return true;
}

std::vector<SkewTableau> lr_tableaux(const Partition& lambda, const Partition& mu,
                                     const Partition& nu) {
  std::vector<SkewTableau> out;
  if (!nu.contains(lambda) || !nu.contains(mu) || nu.size() != lambda.size() + mu.size())
    return out;

  Rows rows(static_cast<std::size_t>(nu.length()));
  std::vector<Box> cells;  // reverse reading order: top row first, right to left
  for (int r = 1; r <= nu.length(); ++r) {
    rows[idx(r)].assign(static_cast<std::size_t>(nu.part(idx(r))), 0);
    for (int c = nu.part(idx(r)); c > lambda.part(idx(r)); --c) cells.push_back({r, c});
  }
  const int letters = mu.length();
  std::vector<int> count(static_cast<std::size_t>(letters) + 1, 0);

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.push_back({lambda, rows});
      return;
    }
    const Box b = cells[k];
    int hi = letters;
    auto& row = rows[idx(b.row)];
    if (idx(b.col) + 1 < row.size()) hi = std::min(hi, row[idx(b.col) + 1]);
    int lo = 1;
    if (b.row > 1 && b.col > lambda.part(idx(b.row - 1)))
      lo = rows[idx(b.row - 1)][idx(b.col)] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (count[vi] >= mu.part(vi - 1)) continue;
      if (v > 1 && count[vi] + 1 > count[vi - 1]) continue;
      ++count[vi];
      row[idx(b.col)] = v;
      rec(k + 1);
      row[idx(b.col)] = 0;
      --count[vi];
    }
  };
  rec(0);
  return out;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
  return static_cast<std::int64_t>(lr_tableaux(lambda, mu, nu).size());
}

bool is_standard(const Tableau& t) {
  const int n = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& row : t.rows())
    for (int x : row) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
      seen[static_cast<std::size_t>(x)] = true;
    }
  return true;
}

std::vector<int> standard_horizontal_bands(const Tableau& t) {
  if (!is_standard(t)) throw std::invalid_argument("tableau is not standard");
  const int n = t.size();
  std::vector<Box> where(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c)
      where[static_cast<std::size_t>(t.rows()[r][c])] = {static_cast<int>(r) + 1,
                                                         static_cast<int>(c) + 1};
  std::vector<int> bands;
  for (int j = 1; j <= n; ++j) {
    if (j == 1 || !north_east_less(where[static_cast<std::size_t>(j - 1)],
                                   where[static_cast<std::size_t>(j)]))
      bands.push_back(0);
    ++bands.back();
  }
  return bands;
}

Composition des_syt(const Tableau& t) { return Composition(standard_horizontal_bands(t)); }

int step_syt(const Tableau& t) {
  return static_cast<int>(standard_horizontal_bands(t).size());
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  Rows rows(static_cast<std::size_t>(shape.length()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    rows[r].assign(static_cast<std::size_t>(shape.part(r)), 0);
  std::vector<Box> cells;
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.part(idx(r)); ++c) cells.push_back({r, c});

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.emplace_back(rows);
      return;
    }
    const Box b = cells[k];
    int lo = 1;
    if (b.col > 1) lo = std::max(lo, rows[idx(b.row)][idx(b.col) - 1]);
    if (b.row > 1) lo = std::max(lo, rows[idx(b.row) - 1][idx(b.col)] + 1);
    // Column below needs room: strictly increasing down to the last row.
    const int below = column_height(rows, idx(b.col)) - b.row;
    for (int v = lo; v + below <= max_entry; ++v) {
      rows[idx(b.row)][idx(b.col)] = v;
      rec(k + 1);
    }
    rows[idx(b.row)][idx(b.col)] = 0;
  };
  rec(0);
  return out;
}

std::vector<Tableau> enumerate_syt(const Partition& shape) {
  // Build by adding n = 1, 2, ... at addable corners.
  std::vector<Tableau> out;
  const int n = shape.size();
  Rows rows;
  std::function<void(const Partition&, int)> rec = [&](const Partition& current, int next) {
    if (next > n) {
      out.emplace_back(rows);
      return;
    }
    for (Box b : current.addable_boxes()) {
      if (!shape.contains(b)) continue;
      if (idx(b.row) == rows.size()) rows.emplace_back();
      rows[idx(b.row)].push_back(next);
      rec(current.with_box(b), next + 1);
      rows[idx(b.row)].pop_back();
      if (rows[idx(b.row)].empty()) rows.pop_back();
    }
  };
  rec(Partition{}, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_syt(const Partition& shape) {
  const Partition conj = conjugate(shape);
  std::int64_t num = 1;
  std::int64_t den = 1;
  int k = 0;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape.part(static_cast<std::size_t>(r)); ++c) {
      ++k;
      num *= k;
      den *= (shape.part(static_cast<std::size_t>(r)) - c - 1) +
             (conj.part(static_cast<std::size_t>(c)) - r - 1) + 1;
      const std::int64_t g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  return num / den;
}

}  // namespace ssot
