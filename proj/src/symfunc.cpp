#include "qdyson/symfunc.hpp"

#include <algorithm>
#include <string>

namespace qdyson {

namespace {

void check_letters(const std::vector<Letter>& letters, int nvars) {
  for (const auto& l : letters) {
    if (l.var && (*l.var < 0 || *l.var >= nvars)) {
      throw UsageError("Alphabet: letter variable x" + std::to_string(*l.var) + " outside 0.." +
                       std::to_string(nvars - 1));
    }
  }
}

std::vector<Letter> merged(const std::vector<Letter>& x, const std::vector<Letter>& y) {
  std::vector<Letter> out;
  out.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

// Truncated generating-function update for one letter: multiplies the
// series sum_k H[k] z^k by 1/(1 - z*letter) (complete) or (1 + z*letter)
// (elementary), keeping degrees 0..r.
void absorb_complete(std::vector<MultiPoly>& series, const ExpVec& delta, int qexp) {
  for (std::size_t k = 1; k < series.size(); ++k) series[k] += series[k - 1].times_monomial(delta, qexp);
}

void absorb_elementary(std::vector<MultiPoly>& series, const ExpVec& delta, int qexp) {
  for (std::size_t k = series.size(); k-- > 1;) series[k] += series[k - 1].times_monomial(delta, qexp);
}

ExpVec letter_exponents(const Letter& l, int nvars) {
  ExpVec d(static_cast<std::size_t>(nvars), 0);
  if (l.var) d[static_cast<std::size_t>(*l.var)] = 1;
  return d;
}

std::vector<MultiPoly> unit_series(int nvars, int r) {
  std::vector<MultiPoly> s(static_cast<std::size_t>(r + 1), MultiPoly(nvars));
  s[0] = MultiPoly::constant(nvars, QLaurent(1));
  return s;
}

std::vector<MultiPoly> complete_positive(const std::vector<Letter>& letters, int nvars, int r) {
  auto s = unit_series(nvars, r);
  for (const auto& l : letters) absorb_complete(s, letter_exponents(l, nvars), l.qexp);
  return s;
}

std::vector<MultiPoly> elementary_positive(const std::vector<Letter>& letters, int nvars, int r) {
  auto s = unit_series(nvars, r);
  for (const auto& l : letters) absorb_elementary(s, letter_exponents(l, nvars), l.qexp);
  return s;
}

}  // namespace

Alphabet::Alphabet(int nvars, std::vector<Letter> plus, std::vector<Letter> minus) : nvars_(nvars) {
  if (nvars <= 0) throw UsageError("Alphabet: nvars must be positive");
  check_letters(plus, nvars);
  check_letters(minus, nvars);
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  std::set_difference(plus.begin(), plus.end(), minus.begin(), minus.end(), std::back_inserter(plus_));
  std::set_difference(minus.begin(), minus.end(), plus.begin(), plus.end(), std::back_inserter(minus_));
}

Alphabet operator+(const Alphabet& x, const Alphabet& y) {
  if (x.nvars_ != y.nvars_) throw UsageError("Alphabet +: nvars mismatch");
  return Alphabet(x.nvars_, merged(x.plus_, y.plus_), merged(x.minus_, y.minus_));
}

Alphabet operator-(const Alphabet& x, const Alphabet& y) { return x + (-y); }

Alphabet build_alphabet(std::span<const int> a, int m) {
  const int nvars = static_cast<int>(a.size());
  if (nvars == 0) throw UsageError("build_alphabet: empty composition");
  if (m < 0 || m > nvars) {
    throw UsageError("build_alphabet: m = " + std::to_string(m) + " outside 0.." + std::to_string(nvars));
  }
  std::vector<Letter> letters;
  for (int i = 0; i < nvars; ++i) {
    const int ai = a[static_cast<std::size_t>(i)];
    if (ai < 0) throw UsageError("build_alphabet: negative entry a_" + std::to_string(i));
    const int shift = i < m ? -1 : 0;
    for (int j = 0; j < ai; ++j) letters.push_back(Letter{j + shift, i});
  }
  return Alphabet(nvars, std::move(letters));
}

Alphabet principal_alphabet(int nvars, int a) {
  if (a < 0) throw UsageError("principal_alphabet: negative size");
  std::vector<Letter> letters;
  for (int j = 0; j < a; ++j) letters.push_back(Letter{j, std::nullopt});
  return Alphabet(nvars, std::move(letters));
}

MultiPoly letter_monomial(const Letter& l, int nvars) {
  return MultiPoly::monomial(letter_exponents(l, nvars), QLaurent::q_power(l.qexp));
}

std::vector<MultiPoly> h_upto(const Alphabet& x, int r) {
  if (r < 0) throw UsageError("h_r: negative degree");
  auto hp = complete_positive(x.plus(), x.nvars(), r);
  if (x.is_positive()) return hp;
  // h_r[P - M] = sum_i h_i[P] (-1)^{r-i} e_{r-i}[M]
  const auto em = elementary_positive(x.minus(), x.nvars(), r);
  std::vector<MultiPoly> out(static_cast<std::size_t>(r + 1), MultiPoly(x.nvars()));
  for (int k = 0; k <= r; ++k) {
    for (int i = 0; i <= k; ++i) {
      const MultiPoly term = hp[static_cast<std::size_t>(i)] * em[static_cast<std::size_t>(k - i)];
      if ((k - i) % 2 == 0) {
        out[static_cast<std::size_t>(k)] += term;
      } else {
        out[static_cast<std::size_t>(k)] -= term;
      }
    }
  }
  return out;
}

MultiPoly h_r(const Alphabet& x, int r) { return h_upto(x, r).back(); }

MultiPoly e_r(const Alphabet& x, int r) {
  if (r < 0) throw UsageError("e_r: negative degree");
  if (!x.is_positive()) throw UsageError("e_r: signed alphabets are not supported");
  return elementary_positive(x.plus(), x.nvars(), r).back();
}

MultiPoly h_lambda(const Alphabet& x, std::span<const int> lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw UsageError("h_lambda: negative part");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw UsageError("h_lambda: partition is not weakly decreasing");
  }
  MultiPoly acc = MultiPoly::constant(x.nvars(), QLaurent(1));
  if (lambda.empty() || lambda[0] == 0) return acc;
  const auto h = h_upto(x, lambda[0]);
  for (int part : lambda) {
    if (part == 0) break;
    acc = acc * h[static_cast<std::size_t>(part)];
  }
  return acc;
}

}  // namespace qdyson
