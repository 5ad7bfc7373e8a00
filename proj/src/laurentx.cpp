#include "qdyson/laurentx.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qdyson {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars <= 0) throw UsageError("MultiPoly: nvars must be positive, got " + std::to_string(nvars));
}

MultiPoly MultiPoly::constant(int nvars, QLaurent c) {
  MultiPoly r(nvars);
  if (!c.is_zero()) r.terms_.emplace(ExpVec(static_cast<std::size_t>(nvars), 0), std::move(c));
  return r;
}

MultiPoly MultiPoly::monomial(ExpVec exps, QLaurent c) {
  MultiPoly r(static_cast<int>(exps.size()));
  if (!c.is_zero()) r.terms_.emplace(std::move(exps), std::move(c));
  return r;
}

void MultiPoly::add_term(const ExpVec& exps, const QLaurent& c) {
  if (static_cast<int>(exps.size()) != nvars_) {
    throw UsageError("MultiPoly::add_term: exponent vector of length " + std::to_string(exps.size()) +
                     " for nvars " + std::to_string(nvars_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QLaurent MultiPoly::coeff(const ExpVec& v) const {
  if (static_cast<int>(v.size()) != nvars_) {
    throw UsageError("MultiPoly::coeff: exponent vector of length " + std::to_string(v.size()) +
                     " for nvars " + std::to_string(nvars_));
  }
  auto it = terms_.find(v);
  return it == terms_.end() ? QLaurent() : it->second;
}

MultiPoly MultiPoly::scaled(const QLaurent& c) const {
  MultiPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, k * c);
  return r;
}

MultiPoly MultiPoly::times_monomial(const ExpVec& delta, int qshift) const {
  if (static_cast<int>(delta.size()) != nvars_) throw UsageError("MultiPoly::times_monomial: nvars mismatch");
  MultiPoly r(nvars_);
  // Translation preserves lexicographic order.
  for (const auto& [e, k] : terms_) {
    ExpVec s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += delta[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(s), k.shifted(qshift));
  }
  return r;
}

void MultiPoly::check_compatible(const MultiPoly& rhs, const char* op) const {
  if (nvars_ != rhs.nvars_) {
    throw UsageError(std::string("MultiPoly ") + op + ": nvars mismatch (" + std::to_string(nvars_) + " vs " +
                     std::to_string(rhs.nvars_) + ")");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(rhs, "+");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_compatible(rhs, "-");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.check_compatible(rhs, "*");
  MultiPoly r(lhs.nvars_);
  ExpVec s(static_cast<std::size_t>(lhs.nvars_));
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = ea[i] + eb[i];
      r.add_term(s, ca * cb);
    }
  }
  return r;
}

std::vector<std::pair<int, int>> MultiPoly::exponent_bounds() const {
  std::vector<std::pair<int, int>> b(static_cast<std::size_t>(nvars_), {0, 0});
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (first) {
        b[i] = {e[i], e[i]};
      } else {
        b[i].first = std::min(b[i].first, e[i]);
        b[i].second = std::max(b[i].second, e[i]);
      }
    }
    first = false;
  }
  return b;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i;
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

QLaurent coeff_of_product(const MultiPoly& f, const MultiPoly& g, const ExpVec& v) {
  if (f.nvars() != g.nvars() || static_cast<int>(v.size()) != f.nvars()) {
    throw UsageError("coeff_of_product: nvars mismatch");
  }
  const MultiPoly& small = f.size() <= g.size() ? f : g;
  const MultiPoly& large = f.size() <= g.size() ? g : f;
  QLaurent acc;
  ExpVec w(v.size());
  for (const auto& [e, c] : small.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = v[i] - e[i];
    auto it = large.terms().find(w);
    if (it != large.terms().end()) acc += c * it->second;
  }
  return acc;
}

QLaurent product_coeff(std::span<const MultiPoly> factors, const ExpVec& target, ProductMode mode) {
  const int nvars = static_cast<int>(target.size());
  for (const auto& f : factors) {
    if (f.nvars() != nvars) throw UsageError("product_coeff: nvars mismatch");
  }
  if (mode == ProductMode::kFull) {
    MultiPoly acc = MultiPoly::constant(nvars, QLaurent(1));
    for (const auto& f : factors) acc = acc * f;
    return acc.coeff(target);
  }

  // Suffix bounds: the exponent range the remaining factors can still add.
  const std::size_t nf = factors.size();
  std::vector<std::vector<std::pair<int, int>>> rest(nf + 1,
                                                     std::vector<std::pair<int, int>>(target.size(), {0, 0}));
  for (std::size_t k = nf; k-- > 0;) {
    if (factors[k].is_zero()) return {};
    const auto b = factors[k].exponent_bounds();
    for (std::size_t i = 0; i < target.size(); ++i) {
      rest[k][i] = {rest[k + 1][i].first + b[i].first, rest[k + 1][i].second + b[i].second};
    }
  }

  MultiPoly acc = MultiPoly::constant(nvars, QLaurent(1));
  std::vector<std::pair<int, int>> reached(target.size(), {0, 0});
  for (std::size_t k = 0; k < nf; ++k) {
    const auto b = factors[k].exponent_bounds();
    for (std::size_t i = 0; i < target.size(); ++i) {
      reached[i].first += b[i].first;
      reached[i].second += b[i].second;
    }
    MultiPoly next = acc * factors[k];
    MultiPoly kept(nvars);
    for (const auto& [e, c] : next.terms()) {
      bool ok = true;
      for (std::size_t i = 0; i < e.size() && ok; ++i) {
        assert(e[i] >= reached[i].first && e[i] <= reached[i].second);
        ok = e[i] + rest[k + 1][i].first <= target[i] && e[i] + rest[k + 1][i].second >= target[i];
      }
      if (ok) kept.add_term(e, c);
    }
    acc = std::move(kept);
    if (acc.is_zero()) return {};
  }
  return acc.coeff(target);
}

MultiPoly dyson_pair_factor(int nvars, int i, int j, int a_i, int a_j) {
  if (a_i < 0 || a_j < 0) throw UsageError("dyson_pair_factor: negative exponent");
  if (i < 0 || j < 0 || i >= nvars || j >= nvars || i == j) throw UsageError("dyson_pair_factor: bad index pair");
  const auto n = static_cast<std::size_t>(nvars);
  MultiPoly r = MultiPoly::constant(nvars, QLaurent(1));
  ExpVec ratio(n, 0);  // x_i / x_j
  ratio[static_cast<std::size_t>(i)] = 1;
  ratio[static_cast<std::size_t>(j)] = -1;
  ExpVec inv(n, 0);  // x_j / x_i
  inv[static_cast<std::size_t>(i)] = -1;
  inv[static_cast<std::size_t>(j)] = 1;
  // (x_i/x_j; q)_{a_i}: factors 1 - q^l x_i/x_j, l = 0..a_i-1
  for (int l = 0; l < a_i; ++l) r = r - r.times_monomial(ratio, l);
  // (q x_j/x_i; q)_{a_j}: factors 1 - q^l x_j/x_i, l = 1..a_j
  for (int l = 1; l <= a_j; ++l) r = r - r.times_monomial(inv, l);
  return r;
}

std::vector<MultiPoly> dyson_factors(std::span<const int> a) {
  if (a.empty()) throw UsageError("dyson_factors: empty composition");
  for (int x : a) {
    if (x < 0) throw UsageError("dyson_product: negative entry " + std::to_string(x));
  }
  const int nvars = static_cast<int>(a.size());
  std::vector<MultiPoly> out;
  for (int i = 0; i < nvars; ++i) {
    for (int j = i + 1; j < nvars; ++j) {
      if (a[static_cast<std::size_t>(i)] == 0 && a[static_cast<std::size_t>(j)] == 0) continue;
      out.push_back(dyson_pair_factor(nvars, i, j, a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

MultiPoly dyson_product(std::span<const int> a) {
  const auto factors = dyson_factors(a);
  MultiPoly acc = MultiPoly::constant(static_cast<int>(a.size()), QLaurent(1));
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

MultiPoly gamma_apply(const MultiPoly& f) {
  MultiPoly r(f.nvars());
  const std::size_t n = static_cast<std::size_t>(f.nvars());
  ExpVec s(n);
  for (const auto& [e, c] : f.terms()) {
    // x_n^{e_n} becomes (x_0/q)^{e_n}; x_{i-1}^{e_{i-1}} becomes x_i^{e_{i-1}}.
    s[0] = e[n - 1];
    for (std::size_t i = 1; i < n; ++i) s[i] = e[i - 1];
    r.add_term(s, c.shifted(-e[n - 1]));
  }
  return r;
}

}  // namespace qdyson
