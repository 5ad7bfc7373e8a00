#pragma once

// Naive reference implementations used only by the tests. Nothing here
// touches MultiPoly, Alphabet or QRat: constant terms are found by summing
// over every choice of term in every binomial factor, and Gaussian
// binomials come from the q-Pascal recurrence.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "qdyson/qseries.hpp"

namespace oracle {

using Series = std::map<int, long long>;  // q-exponent -> coefficient

inline void add_into(Series& acc, int shift, const Series& s, long long sign = 1) {
  for (const auto& [e, c] : s) {
    auto& slot = acc[e + shift];
    slot += sign * c;
    if (slot == 0) acc.erase(e + shift);
  }
}

inline Series mul(const Series& f, const Series& g) {
  Series out;
  for (const auto& [e, c] : f) {
    for (const auto& [d, k] : g) {
      auto& slot = out[e + d];
      slot += c * k;
      if (slot == 0) out.erase(e + d);
    }
  }
  return out;
}

inline qdyson::QLaurent to_laurent(const Series& s) {
  qdyson::QLaurent out;
  for (const auto& [e, c] : s) out += qdyson::QLaurent::monomial(qdyson::Integer(static_cast<long>(c)), e);
  return out;
}

// Gaussian binomial [n choose k] for 0 <= k <= n via
// [n,k] = [n-1,k-1] + q^k [n-1,k].
inline Series gauss(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<std::vector<Series>> t(n + 1, std::vector<Series>(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[i][0] = {{0, 1}};
    for (int j = 1; j <= i; ++j) {
      t[i][j] = t[i - 1][j - 1];
      add_into(t[i][j], j, t[i - 1][j]);
    }
  }
  return t[n][k];
}

// (q;q)_{|a|} / prod (q;q)_{a_i} as a product of Gaussian binomials.
inline Series multinomial(const std::vector<int>& a) {
  Series out{{0, 1}};
  int tail = std::accumulate(a.begin(), a.end(), 0);
  for (int ai : a) {
    out = mul(out, gauss(tail, ai));
    tail -= ai;
  }
  return out;
}

struct Mono {
  std::vector<int> x;
  int q = 0;
};

// Monomials of h_lambda on the alphabet { x_i q^{j - [i < m]} : j < a_i },
// one entry per multiset of letter positions (so repeats are expected).
inline std::vector<Mono> h_lambda_monomials(const std::vector<int>& a, int m, const std::vector<int>& lambda) {
  const int nvars = static_cast<int>(a.size());
  std::vector<Mono> letters;
  for (int i = 0; i < nvars; ++i) {
    for (int j = 0; j < a[i]; ++j) {
      Mono l{std::vector<int>(nvars, 0), j - (i < m ? 1 : 0)};
      l.x[i] = 1;
      letters.push_back(l);
    }
  }
  std::vector<Mono> out{Mono{std::vector<int>(nvars, 0), 0}};
  for (int r : lambda) {
    std::vector<Mono> next;
    // Non-decreasing index tuples of length r.
    std::vector<int> idx(r, 0);
    auto emit = [&](const Mono& base) {
      Mono m2 = base;
      for (int p : idx) {
        for (int i = 0; i < nvars; ++i) m2.x[i] += letters[p].x[i];
        m2.q += letters[p].q;
      }
      next.push_back(m2);
    };
    if (r == 0) {
      next = out;
    } else if (!letters.empty()) {
      const int L = static_cast<int>(letters.size());
      while (true) {
        for (const auto& base : out) emit(base);
        int pos = r - 1;
        while (pos >= 0 && idx[pos] == L - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int p = pos + 1; p < r; ++p) idx[p] = idx[pos];
      }
    }
    out = std::move(next);
  }
  return out;
}

// CT of x^{-v} h_lambda(alphabet) prod_{i<j} (x_i/x_j;q)_{a_i} (q x_j/x_i;q)_{a_j},
// summing over the 2^(#factors) term choices.
inline Series constant_term(const std::vector<int>& v, const std::vector<int>& lambda, const std::vector<int>& a, int m) {
  const int nvars = static_cast<int>(a.size());
  struct Factor {
    int i, j, qexp;  // the non-unit term is -q^qexp x_i / x_j
  };
  std::vector<Factor> factors;
  for (int i = 0; i < nvars; ++i) {
    for (int j = i + 1; j < nvars; ++j) {
      for (int l = 0; l < a[i]; ++l) factors.push_back({i, j, l});
      for (int l = 1; l <= a[j]; ++l) factors.push_back({j, i, l});
    }
  }
  // Group h_lambda monomials by x-exponent.
  std::map<std::vector<int>, Series> h;
  for (const auto& mono : h_lambda_monomials(a, m, lambda)) {
    auto& s = h[mono.x];
    if (++s[mono.q] == 0) s.erase(mono.q);
  }
  Series out;
  const std::uint64_t leaves = std::uint64_t{1} << factors.size();
  std::vector<int> e(nvars);
  for (std::uint64_t mask = 0; mask < leaves; ++mask) {
    std::fill(e.begin(), e.end(), 0);
    int qexp = 0;
    long long sign = 1;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (mask >> f & 1) {
        ++e[factors[f].i];
        --e[factors[f].j];
        qexp += factors[f].qexp;
        sign = -sign;
      }
    }
    // Need the h-monomial x^{v - e}.
    std::vector<int> need(nvars);
    for (int i = 0; i < nvars; ++i) need[i] = v[i] - e[i];
    auto it = h.find(need);
    if (it != h.end()) add_into(out, qexp, it->second, sign);
  }
  return out;
}

}  // namespace oracle
