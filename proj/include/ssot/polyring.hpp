#pragma once

// Exact sparse polynomials in a fixed number of variables x_1..x_k, and the
// symmetric / quasi-symmetric families built on them.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ssot/shapes.hpp"

namespace ssot {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

/// Graded lexicographic, larger first: higher total degree, then lex.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class SparsePoly {
 public:
  using Terms = std::map<Exponent, BigInt, GradedLexGreater>;

  explicit SparsePoly(int nvars);

  static SparsePoly constant(int nvars, const BigInt& c);
  /// x_i for 1 <= i <= nvars.
  static SparsePoly variable(int nvars, int i);
  static SparsePoly monomial(Exponent exp, const BigInt& coef = 1);

  int nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const Exponent& exp) const;

  /// Adds coef·x^exp, dropping the term if it cancels.
  void add_term(const Exponent& exp, const BigInt& coef);

  /// Total degree when all terms share it; -1 for zero or mixed degrees.
  int homogeneous_degree() const;
  /// Drops terms of total degree > maxdeg.
  SparsePoly truncated(int maxdeg) const;
  /// f(1, ..., 1).
  BigInt evaluate_at_ones() const;
  /// Human-readable form, e.g. "x1^2*x2 + 2*x1*x2*x3".
  std::string to_string() const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const BigInt& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const BigInt& c) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const SparsePoly& other) const;

  int nvars_;
  Terms terms_;
};

/// Product with all terms of total degree > maxdeg dropped.
SparsePoly truncated_mul(const SparsePoly& f, const SparsePoly& g, int maxdeg);

/// x^c for a weak composition c of length <= k (zero-padded).
Exponent exponent_of(const Composition& c, int k);

/// M_b(x_1..x_k). b must be strong.
SparsePoly monomial_qsym(const Composition& b, int k);
/// F_a(x_1..x_k) = sum of M_b over strong refinements b of a.
SparsePoly fundamental_qsym(const Composition& a, int k);
/// s_lambda(x_1..x_k) as the generating function of SSYT with entries <= k.
SparsePoly schur_poly(const Partition& lambda, int k);
/// ss_{lambda,n}(x_1..x_k): generating function of SSOT of shape lambda,
/// length n, letters <= k. Zero when n is not admissible.
SparsePoly ssot_poly(const Partition& lambda, int n, int k);

/// Multiplicity of each descent composition over QYOT_{<=k,n}(lambda).
std::map<Composition, long long, std::greater<>> f_expansion(const Partition& lambda,
                                                               int n, int max_step);

/// prod_{1<=i<j<=k} (1 - x_i x_j)^{-1}, truncated at total degree maxdeg.
SparsePoly littlewood_truncated(int k, int maxdeg);

/// Invariant under every adjacent transposition of variables.
bool is_symmetric(const SparsePoly& f);

using SchurCoefficients = std::map<Partition, BigInt, std::greater<>>;

/// Coefficients b_nu with f = sum b_nu s_nu(x_1..x_k). f must be symmetric,
/// homogeneous of degree n (or zero) and k >= n; throws std::invalid_argument
/// otherwise.
SchurCoefficients schur_expand(const SparsePoly& f);

}  // namespace ssot
