#pragma once

// Schur expansions of SSOT functions, Hall inner products, similarity
// thresholds, linear independence and saturated Newton polytope checks.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ssot/polyring.hpp"
#include "ssot/shapes.hpp"

namespace ssot {

using Rational = boost::multiprecision::cpp_rational;

struct SchurExpansion {
  int degree = 0;
  SchurCoefficients coefficients;

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
};

/// Partitions of m whose conjugate is even (every part repeated in pairs).
std::vector<Partition> even_conjugate_partitions(int m);

/// ss_{lambda,n} in the Schur basis via LR coefficients. Throws
/// std::domain_error when n is not admissible.
SchurExpansion ssot_schur(const Partition& lambda, int n);

/// <ss_{lambda,n}, ss_{mu,n}>. Throws std::invalid_argument when the sizes
/// differ and std::domain_error when n is not admissible.
BigInt hall_inner(const Partition& lambda, const Partition& mu, int n);

/// V^n(lambda) ∩ V^n(mu), descending.
std::vector<Partition> similarity_shapes(const Partition& lambda, const Partition& mu, int n);
bool n_similar(const Partition& lambda, const Partition& mu, int n);
/// Least admissible n at which lambda and mu are n-similar.
int n_zero(const Partition& lambda, const Partition& mu);

/// Rank over Q.
int rational_rank(std::vector<std::vector<Rational>> rows);
/// Rank of the matrix of ssot_schur(lambda, n), lambda ⊢ m, in the basis
/// of partitions of n.
int independence_rank(int m, int n);

/// p ∈ conv(points), decided exactly.
bool in_convex_hull(const Exponent& p, const std::vector<Exponent>& points);

struct LatticePolytopeCheck {
  std::vector<Exponent> support;
  std::vector<Exponent> polytope_points;
  bool snp = false;
};

/// Throws std::invalid_argument for the zero polynomial.
LatticePolytopeCheck has_snp(const SparsePoly& f);

}  // namespace ssot
