#pragma once

// Signed alphabets of letters q^j x_i (or pure q^j) and the complete and
// elementary symmetric functions evaluated on them.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "qdyson/laurentx.hpp"

namespace qdyson {

struct Letter {
  int qexp = 0;
  std::optional<int> var;  // absent: the pure letter q^qexp

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Formal difference plus - minus of two letter multisets. Letters common to
/// both sides cancel on construction; both sides are kept sorted.
class Alphabet {
 public:
  explicit Alphabet(int nvars, std::vector<Letter> plus = {}, std::vector<Letter> minus = {});

  int nvars() const { return nvars_; }
  const std::vector<Letter>& plus() const { return plus_; }
  const std::vector<Letter>& minus() const { return minus_; }
  bool is_positive() const { return minus_.empty(); }

  // Multiset union of the plus parts and of the minus parts.
  friend Alphabet operator+(const Alphabet& x, const Alphabet& y);
  friend Alphabet operator-(const Alphabet& x, const Alphabet& y);
  Alphabet operator-() const { return Alphabet(nvars_, minus_, plus_); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int nvars_;
  std::vector<Letter> plus_;
  std::vector<Letter> minus_;
};

/// Letters x_i q^{j - [i < m]} for 0 <= j < a_i. m = 0 gives the plain
/// alphabet x_0, x_0 q, ..., x_n q^{a_n - 1}.
Alphabet build_alphabet(std::span<const int> a, int m);

/// Pure letters 1, q, ..., q^{a-1} in an ambient space of nvars variables.
Alphabet principal_alphabet(int nvars, int a);

/// The letter as a monomial of the ambient ring.
MultiPoly letter_monomial(const Letter& l, int nvars);

/// h_0[X], ..., h_r[X].
std::vector<MultiPoly> h_upto(const Alphabet& x, int r);

MultiPoly h_r(const Alphabet& x, int r);

/// Positive alphabets only; a signed alphabet is a UsageError.
MultiPoly e_r(const Alphabet& x, int r);

/// h_{lambda_0} h_{lambda_1} ...; lambda must be weakly decreasing and
/// non-negative.
MultiPoly h_lambda(const Alphabet& x, std::span<const int> lambda);

}  // namespace qdyson
