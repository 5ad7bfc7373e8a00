#include "qdyson/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qdyson {

namespace {

using DensePoly = std::vector<Integer>;  // index = degree

void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Splits a nonzero Laurent polynomial into q^shift * p(q) with p(0) != 0.
std::pair<int, DensePoly> to_dense(const QLaurent& f) {
  const int lo = f.min_exp();
  DensePoly p(static_cast<std::size_t>(f.max_exp() - lo + 1));
  for (const auto& [e, c] : f.terms()) p[static_cast<std::size_t>(e - lo)] = c;
  return {lo, std::move(p)};
}

QLaurent from_dense(const DensePoly& p, int shift) {
  std::vector<QLaurent::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) terms.emplace_back(static_cast<int>(i) + shift, p[i]);
  }
  return QLaurent::from_terms(std::move(terms));
}

Integer content(const DensePoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Remainder of a modulo b over Q; b nonzero.
std::vector<mpq_class> rem_q(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t off = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[off + i] -= f * b[i];
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

void make_monic(std::vector<mpq_class>& p) {
  const mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
}

// Exact division in Z[q]; the caller guarantees divisibility.
DensePoly divexact(DensePoly a, const DensePoly& b) {
  if (b.size() == 1) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b[0].get_mpz_t());
    return a;
  }
  const std::size_t db = b.size() - 1;
  DensePoly quot(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    Integer f;
    mpz_divexact(f.get_mpz_t(), a[k].get_mpz_t(), b.back().get_mpz_t());
    quot[k - db] = f;
    if (f == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= f * b[i];
  }
  return quot;
}

}  // namespace

// ---------------------------------------------------------------------------
// QLaurent

QLaurent::QLaurent(long c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

QLaurent::QLaurent(Integer c) {
  if (c != 0) terms_.emplace_back(0, std::move(c));
}

QLaurent QLaurent::monomial(Integer c, int exp) {
  QLaurent r;
  if (c != 0) r.terms_.emplace_back(exp, std::move(c));
  return r;
}

QLaurent QLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  QLaurent r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
    } else {
      if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
  return r;
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Integer QLaurent::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

QLaurent QLaurent::shifted(int k) const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto i = terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Integer c = i->second + j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& rhs) { return *this += -rhs; }

QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.size() == 1 && lhs.terms_[0].second == 1) return rhs.shifted(lhs.terms_[0].first);
  if (rhs.size() == 1 && rhs.terms_[0].second == 1) return lhs.shifted(rhs.terms_[0].first);
  const int lo = lhs.min_exp() + rhs.min_exp();
  const int hi = lhs.max_exp() + rhs.max_exp();
  std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      auto& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  QLaurent r;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] != 0) r.terms_.emplace_back(static_cast<int>(k) + lo, std::move(acc[k]));
  }
  return r;
}

std::strong_ordering operator<=>(const QLaurent& lhs, const QLaurent& rhs) {
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = lhs.terms_[i];
    const auto& b = rhs.terms_[i];
    if (auto c = a.first <=> b.first; c != 0) return c;
    const int s = cmp(a.second, b.second);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return lhs.size() <=> rhs.size();
}

std::string QLaurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Univariate gcd over Q

std::vector<Integer> poly_gcd(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<mpq_class> x(a.begin(), a.end());
  std::vector<mpq_class> y(b.begin(), b.end());
  while (!x.empty() && x.back() == 0) x.pop_back();
  while (!y.empty() && y.back() == 0) y.pop_back();
  if (x.size() < y.size()) std::swap(x, y);
  if (x.empty()) return {};
  while (!y.empty()) {
    make_monic(y);
    auto r = rem_q(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  // Clear denominators, then strip content.
  Integer l = 1;
  for (const auto& c : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  DensePoly g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpq_class t = x[i] * l;
    g[i] = t.get_num();
  }
  const Integer ct = content(g);
  for (auto& c : g) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ct.get_mpz_t());
  if (g.back() < 0) {
    for (auto& c : g) c = -c;
  }
  return g;
}

// ---------------------------------------------------------------------------
// QRat

QRat::QRat(QLaurent num, QLaurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("division by zero in Q(q)");
  normalize();
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = QLaurent(1);
    return;
  }
  if (den_.is_one()) return;
  auto [num_shift, n] = to_dense(num_);
  auto [den_shift, d] = to_dense(den_);
  if (d.size() > 1 && n.size() > 1) {
    DensePoly g = poly_gcd(n, d);
    if (g.size() > 1) {
      n = divexact(std::move(n), g);
      d = divexact(std::move(d), g);
    }
  }
  Integer cn = content(n);
  Integer cd = content(d);
  Integer c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (d[0] < 0) c = -c;
  if (c != 1) {
    for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  trim(n);
  trim(d);
  num_ = from_dense(n, num_shift - den_shift);
  den_ = from_dense(d, 0);
}

const QLaurent& QRat::as_laurent() const {
  if (!is_laurent()) throw UsageError("not a Laurent polynomial: " + to_string());
  return num_;
}

QRat QRat::operator-() const { return QRat(Raw{}, -num_, den_); }

QRat QRat::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(q)");
  return QRat(den_, num_);
}

QRat operator+(const QRat& lhs, const QRat& rhs) {
  if (lhs.is_zero()) return rhs;
  if (rhs.is_zero()) return lhs;
  if (lhs.den_ == rhs.den_) return QRat(lhs.num_ + rhs.num_, lhs.den_);
  return QRat(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

QRat operator-(const QRat& lhs, const QRat& rhs) { return lhs + (-rhs); }

QRat operator*(const QRat& lhs, const QRat& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.is_laurent() && rhs.is_laurent()) return QRat(QRat::Raw{}, lhs.num_ * rhs.num_, QLaurent(1));
  return QRat(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
}

QRat operator/(const QRat& lhs, const QRat& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero in Q(q)");
  if (lhs.is_zero()) return {};
  return QRat(lhs.num_ * rhs.den_, lhs.den_ * rhs.num_);
}

std::string QRat::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// q-shifted factorials

namespace {

QLaurent one_minus_q_power(int e) {
  return QLaurent::from_terms({{0, Integer(1)}, {e, Integer(-1)}});
}

}  // namespace

QLaurent poch_laurent(int a, int k) {
  if (k < 0) throw UsageError("poch_laurent: negative length " + std::to_string(k));
  QLaurent r(1);
  for (int i = 0; i < k; ++i) r *= one_minus_q_power(a + i);
  return r;
}

QRat poch(int a, int k) {
  if (k >= 0) return QRat(poch_laurent(a, k));
  QLaurent den(1);
  for (int i = k; i < 0; ++i) {
    if (a + i == 0) {
      throw PoleError("poch(" + std::to_string(a) + ", " + std::to_string(k) + "): factor 1 - q^0 in denominator");
    }
    den *= one_minus_q_power(a + i);
  }
  return QRat(QLaurent(1), den);
}

QRat qbinom(int n, int k) {
  if (k < 0) throw UsageError("qbinom: negative lower index " + std::to_string(k));
  return poch(n - k + 1, k) / poch(1, k);
}

// ---------------------------------------------------------------------------
// Interpolation

QRat evaluate_polynomial(std::span<const QRat> coeffs, const QRat& t) {
  QRat acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<QRat> interpolate(std::span<const std::pair<QRat, QRat>> points) {
  if (points.empty()) throw UsageError("interpolate: no points");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw UsageError("interpolate: duplicate node " + points[i].first.to_string());
      }
    }
  }
  // Master polynomial prod (t - t_k), then synthetic division per node.
  std::vector<QRat> master{QRat(1)};
  for (const auto& [tk, yk] : points) {
    std::vector<QRat> next(master.size() + 1);
    for (std::size_t i = 0; i < master.size(); ++i) {
      next[i + 1] += master[i];
      next[i] -= master[i] * tk;
    }
    master = std::move(next);
  }
  std::vector<QRat> coeffs(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& [tj, yj] = points[j];
    if (yj.is_zero()) continue;
    // basis = master / (t - t_j)
    std::vector<QRat> basis(n);
    QRat carry;
    for (std::size_t i = n; i-- > 0;) {
      carry = master[i + 1] + carry * tj;
      basis[i] = carry;
    }
    QRat denom(1);
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) denom *= tj - points[k].first;
    }
    const QRat scale = yj / denom;
    for (std::size_t i = 0; i < n; ++i) coeffs[i] += basis[i] * scale;
  }
  return coeffs;
}

}  // namespace qdyson
