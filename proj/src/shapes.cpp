#include "ssot/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ssot {

namespace {

template <typename T>
void sort_descending(std::vector<T>& v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join_parts(const std::vector<int>& parts, bool compact) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && !compact) os << ',';
    os << parts[i];
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::with_box(Box b) const {
  std::vector<int> p = parts_;
  const auto r = static_cast<std::size_t>(b.row - 1);
  if (b.row < 1 || r > p.size() || b.col != part(r) + 1 ||
      (r > 0 && p[r - 1] < b.col))
    throw std::invalid_argument("box is not addable");
  if (r == p.size()) p.push_back(0);
  ++p[r];
  return Partition(std::move(p));
}

Partition Partition::without_box(Box b) const {
  std::vector<int> p = parts_;
  const auto r = static_cast<std::size_t>(b.row - 1);
  if (b.row < 1 || r >= p.size() || b.col != p[r] || part(r + 1) >= b.col)
    throw std::invalid_argument("box is not removable");
  --p[r];
  return Partition(std::move(p));
}

std::vector<Box> Partition::addable_boxes() const {
  std::vector<Box> out;
  for (std::size_t r = 0; r <= parts_.size(); ++r) {
    if (r == 0 || parts_[r - 1] > part(r))
      out.push_back({static_cast<int>(r) + 1, part(r) + 1});
  }
  return out;
}

std::vector<Box> Partition::removable_boxes() const {
  std::vector<Box> out;
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] > part(r + 1)) out.push_back({static_cast<int>(r) + 1, parts_[r]});
  }
  return out;
}

std::string Partition::to_string() const {
  return "(" + join_parts(parts_, false) + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_string();
}

// -------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

int Composition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::is_strong() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p > 0; });
}

Composition Composition::trimmed() const {
  std::vector<int> p = parts_;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Composition(std::move(p));
}

std::string Composition::to_string() const {
  const bool compact = std::all_of(parts_.begin(), parts_.end(),
                                   [](int p) { return p < 10; });
  if (parts_.empty()) return "()";
  if (!compact) return "(" + join_parts(parts_, false) + ")";
  return join_parts(parts_, true);
}

bool operator==(const Composition& a, const Composition& b) {
  return a.trimmed().parts_ == b.trimmed().parts_;
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  return a.trimmed().parts_ <=> b.trimmed().parts_;
}

std::ostream& operator<<(std::ostream& os, const Composition& c) {
  return os << c.to_string();
}

// --------------------------------------------------------------- operations

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.part(0)), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool is_even_partition(const Partition& lambda) {
  return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                     [](int p) { return p % 2 == 0; });
}

Composition flat(const Composition& c) {
  std::vector<int> out;
  std::copy_if(c.parts().begin(), c.parts().end(), std::back_inserter(out),
               [](int p) { return p != 0; });
  return Composition(std::move(out));
}

bool refines(const Composition& b, const Composition& a) {
  if (!a.is_strong() || !b.is_strong())
    throw std::invalid_argument("refines: compositions must be strong");
  std::size_t j = 0;
  for (int target : a.parts()) {
    int acc = 0;
    while (acc < target && j < b.parts().size()) acc += b.parts()[j++];
    if (acc != target) return false;
  }
  return j == b.parts().size();
}

std::vector<Composition> ref_set(const Composition& a) {
  if (!a.is_strong())
    throw std::invalid_argument("ref_set: composition must be strong");
  std::vector<Composition> out;
  std::vector<int> current;
  // Each part a_i splits independently into a composition of a_i.
  std::function<void(std::size_t, int)> split = [&](std::size_t i, int rest) {
    if (rest == 0) {
      if (i + 1 == a.parts().size()) {
        out.emplace_back(current);
      } else {
        split(i + 1, a.parts()[i + 1]);
      }
      return;
    }
    for (int first = rest; first >= 1; --first) {
      current.push_back(first);
      split(i, rest - first);
      current.pop_back();
    }
  };
  if (a.parts().empty()) {
    out.emplace_back();
  } else {
    split(0, a.parts()[0]);
  }
  sort_descending(out);
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw std::invalid_argument("dominance_leq: partitions of different sizes");
  const auto len = static_cast<std::size_t>(std::max(mu.length(), lambda.length()));
  int smu = 0;
  int slambda = 0;
  for (std::size_t i = 0; i < len; ++i) {
    smu += mu.part(i);
    slambda += lambda.part(i);
    if (smu > slambda) return false;
  }
  return true;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  if (!outer.contains(inner)) return false;
  // At most one box per column <=> outer_{i+1} <= inner_i for all i.
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(outer.length()); ++i)
    if (outer.part(i + 1) > inner.part(i)) return false;
  return true;
}

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
  if (!outer.contains(inner)) return false;
  for (std::size_t i = 0; i < static_cast<std::size_t>(outer.length()); ++i)
    if (outer.part(i) - inner.part(i) > 1) return false;
  return true;
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(rest - p, p);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<Partition> add_horizontal_strips(const Partition& inner, int added) {
  std::vector<Partition> out;
  if (added < 0) return out;
  const auto rows = static_cast<std::size_t>(inner.length()) + 1;
  std::vector<int> parts(rows, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t r, int rest) {
    if (r == rows) {
      if (rest == 0) out.emplace_back(parts);
      return;
    }
    const int lo = inner.part(r);
    const int hi = r == 0 ? lo + rest : std::min(inner.part(r - 1), lo + rest);
    for (int v = hi; v >= lo; --v) {
      parts[r] = v;
      rec(r + 1, rest - (v - lo));
    }
  };
  rec(0, added);
  sort_descending(out);
  return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& outer) {
  std::vector<Partition> out;
  const auto rows = static_cast<std::size_t>(outer.length());
  std::vector<int> parts(rows, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == rows) {
      out.emplace_back(parts);
      return;
    }
    for (int v = outer.part(r); v >= outer.part(r + 1); --v) {
      parts[r] = v;
      rec(r + 1);
    }
  };
  rec(0);
  sort_descending(out);
  return out;
}

std::vector<Partition> add_vertical_strips(const Partition& inner, int added) {
  std::vector<Partition> out;
  if (added < 0) return out;
  const auto rows = static_cast<std::size_t>(inner.length() + added);
  std::vector<int> parts(rows, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t r, int rest) {
    if (r == rows) {
      if (rest == 0) out.emplace_back(parts);
      return;
    }
    for (int e = std::min(rest, 1); e >= 0; --e) {
      const int v = inner.part(r) + e;
      if (r > 0 && v > parts[r - 1]) continue;
      parts[r] = v;
      rec(r + 1, rest - e);
    }
  };
  rec(0, added);
  sort_descending(out);
  return out;
}

std::vector<Partition> v_set(const Partition& lambda, int n) {
  if (!admissible_length(lambda, n)) return {};
  // Breadth-first closure: frontier holds shapes of a given size.
  std::vector<std::set<Partition>> by_size(static_cast<std::size_t>(n + 1));
  by_size[static_cast<std::size_t>(lambda.size())].insert(lambda);
  for (int s = lambda.size(); s < n; s += 2) {
    for (const Partition& p : by_size[static_cast<std::size_t>(s)]) {
      for (int strip = 2; s + strip <= n; strip += 2) {
        for (Partition& q : add_vertical_strips(p, strip))
          by_size[static_cast<std::size_t>(s + strip)].insert(std::move(q));
      }
    }
  }
  const auto& level = by_size[static_cast<std::size_t>(n)];
  std::vector<Partition> out(level.begin(), level.end());
  sort_descending(out);
  return out;
}

Partition lambda_bar(const Partition& lambda, int n) {
  if (!admissible_length(lambda, n))
    throw std::domain_error("lambda_bar: length " + std::to_string(n) +
                            " is not admissible for " + lambda.to_string());
  const int r = (n - lambda.size()) / 2;
  std::vector<int> parts = lambda.parts();
  if (parts.size() < 2) parts.resize(2, 0);
  parts[0] += r;
  parts[1] += r;
  return Partition(std::move(parts));
}

}  // namespace ssot
