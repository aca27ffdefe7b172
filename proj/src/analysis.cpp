#include "ssot/analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ssot/tableaux.hpp"

namespace ssot {

namespace {

void require_admissible(const Partition& lambda, int n) {
  if (!admissible_length(lambda, n))
    throw std::domain_error("n = " + std::to_string(n) + " is not admissible for " +
                            lambda.to_string() + ": need n >= |lambda| and n - |lambda| even");
}

void require_same_size(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("partitions " + lambda.to_string() + " and " + mu.to_string() +
                                " have different sizes");
}

}  // namespace

std::vector<Partition> even_conjugate_partitions(int m) {
  std::vector<Partition> out;
  if (m < 0 || m % 2 != 0) return out;
  for (const Partition& g : partitions_of(m / 2)) {
    std::vector<int> parts;
    for (int p : g.parts()) parts.insert(parts.end(), 2, p);
    out.emplace_back(std::move(parts));
  }
  return out;
}

SchurExpansion ssot_schur(const Partition& lambda, int n) {
  require_admissible(lambda, n);
  SchurExpansion out;
  out.degree = n;
  const std::vector<Partition> betas = even_conjugate_partitions(n - lambda.size());
  for (const Partition& nu : partitions_of(n)) {
    if (!nu.contains(lambda)) continue;
    BigInt c = 0;
    for (const Partition& beta : betas) c += lr_coefficient(beta, lambda, nu);
    if (c != 0) out.coefficients.emplace(nu, c);
  }
  return out;
}

BigInt hall_inner(const Partition& lambda, const Partition& mu, int n) {
  require_same_size(lambda, mu);
  require_admissible(lambda, n);
  const SchurExpansion a = ssot_schur(lambda, n);
  const SchurExpansion b = ssot_schur(mu, n);
  BigInt s = 0;
  for (const auto& [nu, c] : a.coefficients) {
    auto it = b.coefficients.find(nu);
    if (it != b.coefficients.end()) s += c * it->second;
  }
  return s;
}

std::vector<Partition> similarity_shapes(const Partition& lambda, const Partition& mu, int n) {
  require_same_size(lambda, mu);
  const std::vector<Partition> a = v_set(lambda, n);
  const std::vector<Partition> b = v_set(mu, n);
  std::vector<Partition> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        std::greater<>());
  return out;
}

bool n_similar(const Partition& lambda, const Partition& mu, int n) {
  return !similarity_shapes(lambda, mu, n).empty();
}

int n_zero(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu);
  const int m = lambda.size();
  const int bound = std::max(m * m, m);
  for (int n = m; n <= bound; n += 2)
    if (n_similar(lambda, mu, n)) return n;
  throw std::logic_error("n_zero: no similarity found below m^2");
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

int independence_rank(int m, int n) {
  if (m < 0 || !admissible_length(m, n))
    throw std::domain_error("n = " + std::to_string(n) + " is not admissible for m = " +
                            std::to_string(m) + ": need n >= m and n - m even");
  const std::vector<Partition> cols = partitions_of(n);
  std::vector<std::vector<Rational>> rows;
  for (const Partition& lambda : partitions_of(m)) {
    const SchurExpansion e = ssot_schur(lambda, n);
    std::vector<Rational> row;
    row.reserve(cols.size());
    for (const Partition& nu : cols) {
      auto it = e.coefficients.find(nu);
      row.emplace_back(it == e.coefficients.end() ? BigInt(0) : it->second);
    }
    rows.push_back(std::move(row));
  }
  return rational_rank(std::move(rows));
}

bool in_convex_hull(const Exponent& p, const std::vector<Exponent>& points) {
  if (points.empty()) return false;
  const std::size_t k = p.size();
  for (const Exponent& q : points)
    if (q.size() != k) throw std::invalid_argument("in_convex_hull: dimension mismatch");
  if (std::find(points.begin(), points.end(), p) != points.end()) return true;

  // Phase-one simplex: find w >= 0 with sum w_s s = p and sum w_s = 1.
  const std::size_t m = k + 1;
  const std::size_t nw = points.size();
  const std::size_t ncols = nw + m;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(ncols + 1, Rational(0)));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < nw; ++s) a[r][s] = points[s][r];
    a[r][ncols] = p[r];
  }
  for (std::size_t s = 0; s < nw; ++s) a[k][s] = 1;
  a[k][ncols] = 1;
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    a[r][nw + r] = 1;
    basis[r] = nw + r;
  }
  std::vector<Rational> obj(ncols + 1, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < nw; ++j) obj[j] -= a[r][j];
  for (std::size_t r = 0; r < m; ++r) obj[ncols] -= a[r][ncols];

  while (true) {
    // Bland's rule: smallest entering and leaving indices.
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == ncols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (a[r][enter] <= 0) continue;
      const Rational ratio = a[r][ncols] / a[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen in phase one
    const Rational pv = a[leave][enter];
    for (Rational& x : a[leave]) x /= pv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || a[r][enter] == 0) continue;
      const Rational f = a[r][enter];
      for (std::size_t j = 0; j <= ncols; ++j) a[r][j] -= f * a[leave][j];
    }
    if (obj[enter] != 0) {
      const Rational f = obj[enter];
      for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * a[leave][j];
    }
    basis[leave] = enter;
  }
  return obj[ncols] == 0;
}

LatticePolytopeCheck has_snp(const SparsePoly& f) {
  if (f.is_zero()) throw std::invalid_argument("has_snp: zero polynomial");
  LatticePolytopeCheck out;
  for (const auto& [exp, coef] : f.terms()) out.support.push_back(exp);
  std::sort(out.support.begin(), out.support.end());

  const auto k = static_cast<std::size_t>(f.nvars());
  Exponent lo(k), hi(k);
  for (std::size_t i = 0; i < k; ++i) {
    lo[i] = hi[i] = out.support.front()[i];
    for (const Exponent& e : out.support) {
      lo[i] = std::min(lo[i], e[i]);
      hi[i] = std::max(hi[i], e[i]);
    }
  }
  int dmin = std::numeric_limits<int>::max();
  int dmax = 0;
  for (const Exponent& e : out.support) {
    const int d = std::accumulate(e.begin(), e.end(), 0);
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }

  // Every lattice point of the bounding box in the degree range is a candidate.
  Exponent p = lo;
  out.snp = true;
  while (true) {
    const int d = std::accumulate(p.begin(), p.end(), 0);
    if (d >= dmin && d <= dmax && in_convex_hull(p, out.support)) {
      out.polytope_points.push_back(p);
      if (!std::binary_search(out.support.begin(), out.support.end(), p)) out.snp = false;
    }
    std::size_t i = k;
    while (i > 0 && p[i - 1] == hi[i - 1]) {
      p[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++p[i - 1];
  }
  return out;
}

}  // namespace ssot
