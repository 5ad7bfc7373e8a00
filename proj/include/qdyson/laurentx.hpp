#pragma once

// Sparse Laurent polynomials in x_0..x_n over Z[q, 1/q].

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdyson/qseries.hpp"

namespace qdyson {

/// Exponents of x_0..x_n; the length is the ambient variable count.
using ExpVec = std::vector<int>;

class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, QLaurent>;

  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, QLaurent c);
  static MultiPoly monomial(ExpVec exps, QLaurent c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * x^exps; drops the term if the coefficient cancels.
  void add_term(const ExpVec& exps, const QLaurent& c);

  /// Coefficient of x^v; zero if absent.
  QLaurent coeff(const ExpVec& v) const;
  QLaurent constant_term() const { return coeff(ExpVec(static_cast<std::size_t>(nvars_), 0)); }

  MultiPoly scaled(const QLaurent& c) const;
  // Multiplies by q^qshift * x^delta.
  MultiPoly times_monomial(const ExpVec& delta, int qshift) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.nvars_ == rhs.nvars_ && lhs.terms_ == rhs.terms_;
  }

  // Per-variable (min, max) exponent over the support; all zeros when the
  // polynomial is zero.
  std::vector<std::pair<int, int>> exponent_bounds() const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& rhs, const char* op) const;

  int nvars_;
  TermMap terms_;
};

/// Coefficient of x^v in f*g without forming the product.
QLaurent coeff_of_product(const MultiPoly& f, const MultiPoly& g, const ExpVec& v);

enum class ProductMode {
  kFull,      // expand the whole product, then read one coefficient
  kWindowed,  // drop partial-product terms that cannot reach the target
};

/// Coefficient of x^target in the ordered product of factors.
QLaurent product_coeff(std::span<const MultiPoly> factors, const ExpVec& target,
                       ProductMode mode = ProductMode::kWindowed);

/// (x_i/x_j; q)_{a_i} (q x_j/x_i; q)_{a_j}, expanded.
MultiPoly dyson_pair_factor(int nvars, int i, int j, int a_i, int a_j);

/// The pair factors of the Dyson product in lexicographic (i, j) order.
std::vector<MultiPoly> dyson_factors(std::span<const int> a);

/// prod_{i<j} (x_i/x_j; q)_{a_i} (q x_j/x_i; q)_{a_j}; throws UsageError on
/// a negative entry.
MultiPoly dyson_product(std::span<const int> a);

/// f(x_0, ..., x_n) -> f(x_1, ..., x_n, x_0/q).
MultiPoly gamma_apply(const MultiPoly& f);

}  // namespace qdyson
