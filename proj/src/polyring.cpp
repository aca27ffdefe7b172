#include "ssot/polyring.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ssot/oscillating.hpp"

namespace ssot {

namespace {

int degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Multiplies every term by x_var^power (var is 1-based).
SparsePoly shifted(const SparsePoly& f, int var, int power) {
  if (power == 0) return f;
  SparsePoly out(f.nvars());
  for (const auto& [exp, coef] : f.terms()) {
    Exponent e = exp;
    e[static_cast<std::size_t>(var - 1)] += power;
    out.add_term(e, coef);
  }
  return out;
}

int shape_distance(const Partition& a, const Partition& b) {
  const auto len = static_cast<std::size_t>(std::max(a.length(), b.length()));
  int d = 0;
  for (std::size_t i = 0; i < len; ++i) d += std::abs(a.part(i) - b.part(i));
  return d;
}

}  // namespace

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

// --------------------------------------------------------------- SparsePoly

SparsePoly::SparsePoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative number of variables");
}

SparsePoly SparsePoly::constant(int nvars, const BigInt& c) {
  SparsePoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(std::move(e));
}

SparsePoly SparsePoly::monomial(Exponent exp, const BigInt& coef) {
  SparsePoly p(static_cast<int>(exp.size()));
  p.add_term(exp, coef);
  return p;
}

BigInt SparsePoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SparsePoly::add_term(const Exponent& exp, const BigInt& coef) {
  if (static_cast<int>(exp.size()) != nvars_)
    throw std::invalid_argument("exponent length does not match number of variables");
  if (std::any_of(exp.begin(), exp.end(), [](int e) { return e < 0; }))
    throw std::invalid_argument("negative exponent");
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

int SparsePoly::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = degree_of(terms_.begin()->first);
  return degree_of(terms_.rbegin()->first) == d ? d : -1;
}

SparsePoly SparsePoly::truncated(int maxdeg) const {
  SparsePoly out(nvars_);
  for (const auto& [exp, coef] : terms_)
    if (degree_of(exp) <= maxdeg) out.terms_.emplace(exp, coef);
  return out;
}

BigInt SparsePoly::evaluate_at_ones() const {
  BigInt s = 0;
  for (const auto& [exp, coef] : terms_) s += coef;
  return s;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, coef] : terms_) {
    BigInt c = coef;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << '-';
      c = -c;
    }
    first = false;
    const bool constant_term = degree_of(exp) == 0;
    bool need_star = false;
    if (c != 1 || constant_term) {
      os << c;
      need_star = true;
    }
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (exp[i] > 1) os << '^' << exp[i];
      need_star = true;
    }
  }
  return os.str();
}

void SparsePoly::check_compatible(const SparsePoly& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("polynomials have different numbers of variables");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_compatible(other);
  for (const auto& [exp, coef] : other.terms_) add_term(exp, coef);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  check_compatible(other);
  for (const auto& [exp, coef] : other.terms_) add_term(exp, -coef);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coef] : terms_) coef *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  return truncated_mul(a, b, std::numeric_limits<int>::max());
}

SparsePoly truncated_mul(const SparsePoly& f, const SparsePoly& g, int maxdeg) {
  if (f.nvars() != g.nvars())
    throw std::invalid_argument("polynomials have different numbers of variables");
  SparsePoly out(f.nvars());
  Exponent e(static_cast<std::size_t>(f.nvars()));
  for (const auto& [ea, ca] : f.terms()) {
    const int da = degree_of(ea);
    if (da > maxdeg) continue;
    for (const auto& [eb, cb] : g.terms()) {
      if (da + degree_of(eb) > maxdeg) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

// ------------------------------------------------------ symmetric families

Exponent exponent_of(const Composition& c, int k) {
  const Composition t = c.trimmed();
  if (t.length() > k) throw std::invalid_argument("composition longer than variable count");
  Exponent e(static_cast<std::size_t>(k), 0);
  std::copy(t.parts().begin(), t.parts().end(), e.begin());
  return e;
}

SparsePoly monomial_qsym(const Composition& b, int k) {
  if (!b.is_strong()) throw std::invalid_argument("monomial_qsym: composition must be strong");
  SparsePoly out(k);
  const auto m = static_cast<std::size_t>(b.length());
  if (m > static_cast<std::size_t>(k)) return out;
  // Choose positions i_1 < ... < i_m among the k variables.
  std::vector<bool> mask(static_cast<std::size_t>(k), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(m), true);
  do {
    Exponent e(static_cast<std::size_t>(k), 0);
    std::size_t part = 0;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) e[i] = b.parts()[part++];
    out.add_term(e, 1);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

SparsePoly fundamental_qsym(const Composition& a, int k) {
  SparsePoly out(k);
  for (const Composition& b : ref_set(a)) out += monomial_qsym(b, k);
  return out;
}

SparsePoly schur_poly(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("schur_poly: need at least one variable");
  // SSYT as chains of horizontal strips, letter i filling the i-th strip.
  std::map<Partition, SparsePoly> states;
  states.emplace(Partition{}, SparsePoly::constant(k, 1));
  for (int i = 1; i <= k; ++i) {
    std::map<Partition, SparsePoly> next;
    for (const auto& [shape, poly] : states) {
      for (int added = 0; shape.size() + added <= lambda.size(); ++added) {
        for (const Partition& nu : add_horizontal_strips(shape, added)) {
          if (!lambda.contains(nu)) continue;
          auto [it, inserted] = next.try_emplace(nu, k);
          it->second += shifted(poly, i, added);
        }
      }
    }
    states = std::move(next);
  }
  auto it = states.find(lambda);
  return it == states.end() ? SparsePoly(k) : it->second;
}

SparsePoly ssot_poly(const Partition& lambda, int n, int k) {
  if (k < 1) throw std::invalid_argument("ssot_poly: need at least one variable");
  if (!admissible_length(lambda, n)) return SparsePoly(k);
  // State: (current shape, letters used so far).
  std::map<std::pair<Partition, int>, SparsePoly> states;
  states.emplace(std::make_pair(Partition{}, 0), SparsePoly::constant(k, 1));
  for (int i = 1; i <= k; ++i) {
    std::map<std::pair<Partition, int>, SparsePoly> next;
    for (const auto& [key, poly] : states) {
      const auto& [cur, used] = key;
      const std::vector<Partition> deletions =
          i == 1 ? std::vector<Partition>{Partition{}} : remove_horizontal_strips(cur);
      for (const Partition& d : deletions) {
        const int dels = cur.size() - d.size();
        if (used + dels + shape_distance(d, lambda) > n) continue;
        for (int added = 0; used + dels + added <= n; ++added) {
          for (const Partition& r : add_horizontal_strips(d, added)) {
            const int after = used + dels + added;
            if (after + shape_distance(r, lambda) > n) continue;
            auto [it, inserted] = next.try_emplace(std::make_pair(r, after), k);
            it->second += shifted(poly, i, dels + added);
          }
        }
      }
    }
    states = std::move(next);
  }
  auto it = states.find(std::make_pair(lambda, n));
  return it == states.end() ? SparsePoly(k) : it->second;
}

std::map<Composition, long long, std::greater<>> f_expansion(const Partition& lambda, int n,
                                                               int max_step) {
  std::map<Composition, long long, std::greater<>> out;
  for (const Ssot& q : enumerate_qyot(lambda, n, max_step)) ++out[descent_data(q).des];
  return out;
}

SparsePoly littlewood_truncated(int k, int maxdeg) {
  if (k < 1) throw std::invalid_argument("littlewood_truncated: need at least one variable");
  SparsePoly out = SparsePoly::constant(k, 1);
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      SparsePoly series(k);
      for (int t = 0; 2 * t <= maxdeg; ++t) {
        Exponent e(static_cast<std::size_t>(k), 0);
        e[static_cast<std::size_t>(i - 1)] = t;
        e[static_cast<std::size_t>(j - 1)] = t;
        series.add_term(e, 1);
      }
      out = truncated_mul(out, series, maxdeg);
    }
  }
  return out.truncated(maxdeg);
}

bool is_symmetric(const SparsePoly& f) {
  for (int i = 0; i + 1 < f.nvars(); ++i) {
    for (const auto& [exp, coef] : f.terms()) {
      Exponent e = exp;
      std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i) + 1]);
      if (f.coefficient(e) != coef) return false;
    }
  }
  return true;
}

SchurCoefficients schur_expand(const SparsePoly& f) {
  SchurCoefficients out;
  if (f.is_zero()) return out;
  const int n = f.homogeneous_degree();
  if (n < 0) throw std::invalid_argument("schur_expand: polynomial is not homogeneous");
  if (f.nvars() < n)
    throw std::invalid_argument("schur_expand: need at least as many variables as the degree");
  if (!is_symmetric(f)) throw std::invalid_argument("schur_expand: polynomial is not symmetric");
  SparsePoly rest = f;
  while (!rest.is_zero()) {
    // The lex-largest exponent of a symmetric polynomial is weakly decreasing.
    const auto& [exp, coef] = *rest.terms().begin();
    if (!std::is_sorted(exp.begin(), exp.end(), std::greater<>()))
      throw std::logic_error("schur_expand: leading exponent is not a partition");
    const Partition nu(exp);
    const BigInt c = coef;
    out.emplace(nu, c);
    rest -= schur_poly(nu, f.nvars()) * c;
  }
  return out;
}

}  // namespace ssot
