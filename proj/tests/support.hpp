#pragma once

// Shared fixtures and brute-force oracles for the test binaries.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ssot/correspondences.hpp"
#include "ssot/oscillating.hpp"
#include "ssot/polyring.hpp"
#include "ssot/shapes.hpp"
#include "ssot/tableaux.hpp"

namespace ssot::testing {

/// The SSOT with letter rows [[1,244],[2,57],[346]].
inline Ssot worked_ssot() {
  return Ssot::from_letter_rows({{{1}, {2, 4, 4}}, {{2}, {5, 7}}, {{3, 4, 6}}});
}

/// Steps (∅,(2)), ((1),(3,1)), ((1,1),(2,1)).
inline Ssot profile_example_ssot() {
  return Ssot({{Partition{}, Partition{2}}, {Partition{1}, Partition{3, 1}}, {Partition{1, 1}, Partition{2, 1}}});
}

/// Steps (∅,(3)), ((1),(2,1)), ((2,1),(4,1)).
inline Ssot run_example_ssot() {
  return Ssot({{Partition{}, Partition{3}}, {Partition{1}, Partition{2, 1}}, {Partition{2, 1}, Partition{4, 1}}});
}

inline OscillatingTableau run_example_ot() {
  return OscillatingTableau({Partition{}, Partition{1}, Partition{2}, Partition{3}, Partition{2}, Partition{1},
                             Partition{1, 1}, Partition{2, 1}, Partition{3, 1}, Partition{4, 1}});
}

inline std::vector<Partition> partitions_up_to(int m) {
  std::vector<Partition> out;
  for (int s = 0; s <= m; ++s)
    for (const Partition& p : partitions_of(s)) out.push_back(p);
  return out;
}

/// All strong compositions of m.
inline std::vector<Composition> strong_compositions(int m) {
  std::vector<Composition> out;
  if (m == 0) return {Composition{}};
  for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
    std::vector<int> parts;
    int cur = 1;
    for (int i = 0; i < m - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(cur);
        cur = 1;
      } else {
        ++cur;
      }
    }
    parts.push_back(cur);
    out.emplace_back(std::move(parts));
  }
  return out;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::int64_t double_factorial(int n) {
  std::int64_t r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

/// Sum of x^{weight} over a list of SSOT.
inline SparsePoly weight_sum(const std::vector<Ssot>& list, int k) {
  SparsePoly f(k);
  for (const Ssot& s : list) f.add_term(exponent_of(com(s), k), 1);
  return f;
}

/// Schur polynomial from the SSYT list, independent of the strip DP.
inline SparsePoly schur_by_tableaux(const Partition& lambda, int k) {
  SparsePoly f(k);
  for (const Tableau& t : enumerate_ssyt(lambda, k)) {
    Exponent e(static_cast<std::size_t>(k), 0);
    for (int x : t.row_word()) ++e[static_cast<std::size_t>(x - 1)];
    f.add_term(e, 1);
  }
  return f;
}

/// c^nu_{lambda mu} as the number of T of shape mu with T·U(lambda) = U(nu).
inline std::int64_t lr_by_product(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu)) return 0;
  const Tableau target = superstandard(nu);
  const Tableau u = superstandard(lambda);
  std::int64_t count = 0;
  for (const Tableau& t : enumerate_ssyt(mu, std::max(1, nu.length())))
    if (product(t, u) == target) ++count;
  return count;
}

inline Tableau random_tableau(std::mt19937& rng, int max_entry, int max_boxes) {
  std::uniform_int_distribution<int> len(0, max_boxes);
  std::uniform_int_distribution<int> letter(1, max_entry);
  std::vector<int> w(static_cast<std::size_t>(len(rng)));
  for (int& x : w) x = letter(rng);
  return insertion_tableau(w);
}

/// Pairs (letter, count) of a multiset of letters.
inline std::map<int, int> letter_counts(const std::vector<int>& letters) {
  std::map<int, int> m;
  for (int x : letters) ++m[x];
  return m;
}

}  // namespace ssot::testing
