#pragma once

// Exact arithmetic in Z[q, 1/q] and in the rational function field Q(q).

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qdyson/errors.hpp"

namespace qdyson {

using Integer = mpz_class;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Terms are kept sparse, sorted by ascending exponent, and never hold a
/// zero coefficient; the zero polynomial has no terms.
class QLaurent {
 public:
  using Term = std::pair<int, Integer>;

  QLaurent() = default;
  QLaurent(long c);  // NOLINT(google-explicit-constructor)
  explicit QLaurent(Integer c);

  static QLaurent monomial(Integer c, int exp);
  static QLaurent q_power(int exp) { return monomial(Integer(1), exp); }
  // Accepts unsorted terms with repeated exponents; combines and drops zeros.
  static QLaurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  // Only meaningful for nonzero polynomials.
  int min_exp() const { return terms_.front().first; }
  int max_exp() const { return terms_.back().first; }
  Integer coeff(int exp) const;

  // Multiplies by q^k.
  QLaurent shifted(int k) const;
  QLaurent operator-() const;

  QLaurent& operator+=(const QLaurent& rhs);
  QLaurent& operator-=(const QLaurent& rhs);
  QLaurent& operator*=(const QLaurent& rhs) { return *this = *this * rhs; }
  friend QLaurent operator+(QLaurent lhs, const QLaurent& rhs) { return lhs += rhs; }
  friend QLaurent operator-(QLaurent lhs, const QLaurent& rhs) { return lhs -= rhs; }
  friend QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs);

  friend bool operator==(const QLaurent& lhs, const QLaurent& rhs) { return lhs.terms_ == rhs.terms_; }
  friend std::strong_ordering operator<=>(const QLaurent& lhs, const QLaurent& rhs);

  // "1 + q - 3*q^2 + q^-1", ascending exponent; "0" for zero.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Element of Q(q) stored as num/den with num, den in Z[q, 1/q].
///
/// Canonical form: den has no negative exponents and a nonzero constant
/// term, den's constant term is positive, num and den are coprime in Q[q],
/// and the integer contents of num and den are coprime. When den can be
/// made primitive this is exactly "den primitive"; constants such as 1/2
/// keep the 2 in den.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(QLaurent num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  // Throws ArithmeticError when den is zero.
  QRat(QLaurent num, QLaurent den);

  static QRat q_power(int exp) { return QRat(QLaurent::q_power(exp)); }

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  // Throws UsageError unless is_laurent().
  const QLaurent& as_laurent() const;

  QRat operator-() const;
  QRat inverse() const;
  friend QRat operator+(const QRat& lhs, const QRat& rhs);
  friend QRat operator-(const QRat& lhs, const QRat& rhs);
  friend QRat operator*(const QRat& lhs, const QRat& rhs);
  friend QRat operator/(const QRat& lhs, const QRat& rhs);
  QRat& operator+=(const QRat& rhs) { return *this = *this + rhs; }
  QRat& operator-=(const QRat& rhs) { return *this = *this - rhs; }
  QRat& operator*=(const QRat& rhs) { return *this = *this * rhs; }
  QRat& operator/=(const QRat& rhs) { return *this = *this / rhs; }

  friend bool operator==(const QRat& lhs, const QRat& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

  std::string to_string() const;

 private:
  struct Raw {};
  QRat(Raw, QLaurent num, QLaurent den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  QLaurent num_;
  QLaurent den_;
};

/// (q^a; q)_k for any integers a and k. Throws PoleError when k < 0 and a
/// factor 1 - q^0 appears in the denominator.
QRat poch(int a, int k);

/// (q^a; q)_k for k >= 0 as a Laurent polynomial.
QLaurent poch_laurent(int a, int k);

/// q-binomial (q^{n-k+1}; q)_k / (q; q)_k for any integer n and k >= 0.
/// Throws UsageError for negative k.
QRat qbinom(int n, int k);

/// Coefficients c_0..c_d of the unique polynomial of degree <= d through the
/// given d+1 points. Throws UsageError on duplicate nodes or an empty list.
std::vector<QRat> interpolate(std::span<const std::pair<QRat, QRat>> points);

/// Horner evaluation of sum c_i t^i.
QRat evaluate_polynomial(std::span<const QRat> coeffs, const QRat& t);

// gcd in Q[q] of two polynomials given as dense integer coefficient vectors
// (index = degree), returned primitive with positive leading coefficient.
// Exposed for tests.
std::vector<Integer> poly_gcd(const std::vector<Integer>& a, const std::vector<Integer>& b);

}  // namespace qdyson
