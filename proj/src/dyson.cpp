#include "qdyson/dyson.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qdyson {

namespace {

std::string join(std::span<const int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

IntVec strip_zeros(IntVec lambda) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  return lambda;
}

void require_same_length(std::span<const int> v, std::span<const int> a, const char* who) {
  if (v.size() != a.size() || v.empty()) {
    throw UsageError(std::string(who) + ": v and a must have the same positive length");
  }
}

void require_composition(std::span<const int> v, const char* who, const char* name) {
  for (int x : v) {
    if (x < 0) throw UsageError(std::string(who) + ": " + name + " has a negative entry");
  }
}

int sum_range(std::span<const int> a, std::size_t from, std::size_t to) {
  int s = 0;
  for (std::size_t i = from; i < to && i < a.size(); ++i) s += a[i];
  return s;
}

}  // namespace

void CTQuery::validate() const {
  if (n < 0) throw UsageError("query: n must be non-negative");
  const auto len = static_cast<std::size_t>(n + 1);
  if (v.size() != len) throw UsageError("query: v must have n+1 = " + std::to_string(len) + " entries");
  if (a.size() != len) throw UsageError("query: a must have n+1 = " + std::to_string(len) + " entries");
  for (int x : a) {
    if (x < 0) throw UsageError("query: a has a negative entry");
  }
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw UsageError("query: lambda has a negative part");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw UsageError("query: lambda is not weakly decreasing");
  }
  if (m < 0 || m > n + 1) throw UsageError("query: m must lie in 0.." + std::to_string(n + 1));
}

std::string CTQuery::to_string() const {
  return "D[v=" + join(v) + ", lambda=" + join(lambda) + ", a=" + join(a) + ", m=" + std::to_string(m) + "]";
}

// ---------------------------------------------------------------------------
// Engine

std::shared_ptr<const MultiPoly> ConstantTermEngine::dyson(const IntVec& a) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = dyson_.find(a); it != dyson_.end()) return it->second;
  }
  auto p = std::make_shared<const MultiPoly>(dyson_product(a));
  std::lock_guard lock(mutex_);
  return dyson_.try_emplace(a, std::move(p)).first->second;
}

std::shared_ptr<const MultiPoly> ConstantTermEngine::h_lambda_for(const IntVec& a, int m, const IntVec& lambda) {
  auto key = std::make_tuple(a, m, strip_zeros(lambda));
  {
    std::lock_guard lock(mutex_);
    if (auto it = h_lambda_.find(key); it != h_lambda_.end()) return it->second;
  }
  auto p = std::make_shared<const MultiPoly>(h_lambda(build_alphabet(a, m), std::get<2>(key)));
  std::lock_guard lock(mutex_);
  return h_lambda_.try_emplace(std::move(key), std::move(p)).first->second;
}

void ConstantTermEngine::clear() {
  std::lock_guard lock(mutex_);
  dyson_.clear();
  h_lambda_.clear();
}

QLaurent ConstantTermEngine::compute(const CTQuery& query, const ComputeOptions& options) {
  query.validate();
  if (options.skip_weight_mismatch && weight(query.v) != weight(query.lambda)) return {};
  switch (options.mode) {
    case Expansion::kFull: {
      const MultiPoly integrand = h_lambda(build_alphabet(query.a, query.m), query.lambda) * dyson_product(query.a);
      return integrand.coeff(query.v);
    }
    case Expansion::kWindowed: {
      const IntVec lambda = strip_zeros(query.lambda);
      std::vector<MultiPoly> factors;
      if (!lambda.empty()) {
        const auto h = h_upto(build_alphabet(query.a, query.m), lambda.front());
        for (int part : lambda) factors.push_back(h[static_cast<std::size_t>(part)]);
      }
      for (auto& f : dyson_factors(query.a)) factors.push_back(std::move(f));
      return product_coeff(factors, query.v, ProductMode::kWindowed);
    }
    case Expansion::kCached:
      break;
  }
  const auto h = h_lambda_for(query.a, query.m, query.lambda);
  const auto d = dyson(query.a);
  return coeff_of_product(*h, *d, query.v);
}

ConstantTermEngine& default_engine() {
  static ConstantTermEngine engine;
  return engine;
}

QLaurent compute_D(const CTQuery& query, const ComputeOptions& options) {
  return default_engine().compute(query, options);
}

// ---------------------------------------------------------------------------
// Sequences and orders

int weight(std::span<const int> v) { return std::accumulate(v.begin(), v.end(), 0); }

IntVec sort_desc(std::span<const int> v) {
  IntVec s(v.begin(), v.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

bool dominance_ge(std::span<const int> u, std::span<const int> w) {
  const std::size_t len = std::max(u.size(), w.size());
  long su = 0;
  long sw = 0;
  for (std::size_t i = 0; i < len; ++i) {
    su += i < u.size() ? u[i] : 0;
    sw += i < w.size() ? w[i] : 0;
    if (su < sw) return false;
  }
  return true;
}

IntVec drop_index(std::span<const int> s, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= s.size()) throw UsageError("drop_index: index out of range");
  IntVec r;
  r.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (static_cast<int>(i) != k) r.push_back(s[i]);
  }
  return r;
}

IntVec rotate_right(std::span<const int> s) {
  IntVec r(s.begin(), s.end());
  if (!r.empty()) std::rotate(r.rbegin(), r.rbegin() + 1, r.rend());
  return r;
}

int unique_max_index(std::span<const int> v) {
  if (v.empty()) return -1;
  const auto it = std::max_element(v.begin(), v.end());
  if (std::count(v.begin(), v.end(), *it) != 1) return -1;
  return static_cast<int>(it - v.begin());
}

std::vector<IntVec> partitions_of(int w) {
  std::vector<IntVec> out;
  if (w < 0) return out;
  IntVec cur;
  // Parts no larger than the previous one, largest first part first.
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, w, w);
  return out;
}

std::vector<IntVec> box_vectors(int len, int min, int max) {
  std::vector<IntVec> out;
  if (len < 0 || max < min) return out;
  if (len == 0) return {IntVec{}};
  IntVec cur(static_cast<std::size_t>(len), min);
  while (true) {
    out.push_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == max) cur[static_cast<std::size_t>(i--)] = min;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<IntVec> compositions_up_to(int len, int max_weight) {
  std::vector<IntVec> out;
  for (auto& v : box_vectors(len, 0, std::max(max_weight, 0))) {
    if (weight(v) <= max_weight) out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

QRat qdyson_rhs(std::span<const int> a) {
  require_composition(a, "qdyson_rhs", "a");
  QRat r = poch(1, weight(a));
  for (int ai : a) r /= poch(1, ai);
  return r;
}

QRat kadell_rhs(std::span<const int> v, std::span<const int> a) {
  require_same_length(v, a, "kadell_rhs");
  require_composition(v, "kadell_rhs", "v");
  require_composition(a, "kadell_rhs", "a");
  const int r = weight(v);
  if (r < 1) throw UsageError("kadell_rhs: |v| must be positive");
  const auto hot = std::count_if(v.begin(), v.end(), [](int x) { return x != 0; });
  if (hot != 1) return {};
  const auto k = static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](int x) { return x != 0; }) - v.begin());
  const int total = weight(a);
  if (total == 0) throw PoleError("kadell_rhs: |a| = 0 makes 1 - q^{|a|} vanish");
  QRat r_val = QRat::q_power(sum_range(a, k + 1, a.size()));
  r_val *= QRat(QLaurent(1) - QLaurent::q_power(a[k]));
  r_val *= poch(total, r);
  r_val /= QRat(QLaurent(1) - QLaurent::q_power(total));
  r_val /= poch(total - a[k] + 1, r);
  for (std::size_t i = 0; i < a.size(); ++i) r_val *= qbinom(sum_range(a, i, a.size()), a[i]);
  return r_val;
}

RecursionStep thm1_step(std::span<const int> v, std::span<const int> a) {
  require_same_length(v, a, "thm1_step");
  require_composition(v, "thm1_step", "v");
  require_composition(a, "thm1_step", "a");
  const int n = static_cast<int>(v.size()) - 1;
  if (n < 1) throw PreconditionError("thm1_step: needs at least two variables");
  const int k = unique_max_index(v);
  if (k < 0) throw PreconditionError("thm1_step: maximum of v=" + join(v) + " is not unique");
  const auto uk = static_cast<std::size_t>(k);
  if (a[uk] < 1) throw PreconditionError("thm1_step: a_k = 0 at the maximum of v");
  RecursionStep step;
  step.factor = QRat::q_power(sum_range(a, uk + 1, a.size())) * qbinom(v[uk] + weight(a) - 1, a[uk] - 1);
  step.reduced.n = n - 1;
  step.reduced.v = drop_index(v, k);
  step.reduced.lambda = strip_zeros(sort_desc(step.reduced.v));
  step.reduced.a = drop_index(a, k);
  step.reduced.m = 0;
  return step;
}

RecursionStep thm2_step(std::span<const int> v, std::span<const int> a, int m) {
  require_same_length(v, a, "thm2_step");
  require_composition(v, "thm2_step", "v");
  require_composition(a, "thm2_step", "a");
  const int n = static_cast<int>(v.size()) - 1;
  if (n < 1) throw PreconditionError("thm2_step: needs at least two variables");
  if (unique_max_index(v) != 0) throw PreconditionError("thm2_step: v_0 must be the unique maximum of v=" + join(v));
  if (m < 1 || m > n + 1) throw PreconditionError("thm2_step: m must lie in 1.." + std::to_string(n + 1));
  if (a[0] < 1) throw PreconditionError("thm2_step: a_0 must be positive");
  RecursionStep step;
  step.factor = QRat::q_power(sum_range(a, 1, static_cast<std::size_t>(m)) - v[0]) *
                qbinom(v[0] + weight(a) - 1, a[0] - 1);
  step.reduced.n = n - 1;
  step.reduced.v = drop_index(v, 0);
  step.reduced.lambda = strip_zeros(sort_desc(step.reduced.v));
  step.reduced.a = drop_index(a, 0);
  step.reduced.m = m - 1;
  return step;
}

RecursionStep a0_one_step(std::span<const int> v, std::span<const int> a_rest, int m) {
  IntVec a{1};
  a.insert(a.end(), a_rest.begin(), a_rest.end());
  RecursionStep step = thm2_step(v, a, m);
  // qbinom(v_0 + |a| - 1, 0) = 1 at a_0 = 1
  step.factor = QRat::q_power(sum_range(a, 1, static_cast<std::size_t>(m)) - v[0]);
  return step;
}

namespace {

void require_distinct_positive_parts(std::span<const int> v) {
  IntVec pos;
  for (int x : v) {
    if (x > 0) pos.push_back(x);
  }
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) {
    throw PreconditionError("cor1: positive parts of v=" + join(v) + " repeat");
  }
}

}  // namespace

Cor1Plan plan_cor1(std::span<const int> v, std::span<const int> a, std::span<const int> sigma) {
  require_same_length(v, a, "plan_cor1");
  require_composition(v, "plan_cor1", "v");
  require_composition(a, "plan_cor1", "a");
  require_distinct_positive_parts(v);
  const std::size_t len = v.size();
  if (sigma.size() != len) throw UsageError("plan_cor1: sigma has the wrong length");
  std::vector<bool> seen(len, false);
  for (int s : sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= len || seen[static_cast<std::size_t>(s)]) {
      throw UsageError("plan_cor1: sigma is not a permutation");
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
  const IntVec plus = sort_desc(v);
  for (std::size_t i = 0; i < len; ++i) {
    if (v[static_cast<std::size_t>(sigma[i])] != plus[i]) throw UsageError("plan_cor1: sigma does not sort v");
  }
  Cor1Plan plan;
  plan.sigma.assign(sigma.begin(), sigma.end());
  plan.l = static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x > 0; }));
  std::vector<bool> used(len, false);
  for (int i = 0; i < plan.l; ++i) {
    const auto s = static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)]);
    for (std::size_t j = s + 1; j < len; ++j) {
      if (!used[j]) plan.c += a[j];
    }
    used[s] = true;
  }
  return plan;
}

Cor1Plan plan_cor1(std::span<const int> v, std::span<const int> a) {
  std::vector<int> sigma(v.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::stable_sort(sigma.begin(), sigma.end(), [&](int x, int y) {
    return v[static_cast<std::size_t>(x)] > v[static_cast<std::size_t>(y)];
  });
  return plan_cor1(v, a, sigma);
}

std::vector<std::vector<int>> admissible_sigmas(std::span<const int> v) {
  require_distinct_positive_parts(v);
  std::vector<int> base(v.size());
  std::iota(base.begin(), base.end(), 0);
  std::stable_sort(base.begin(), base.end(), [&](int x, int y) {
    return v[static_cast<std::size_t>(x)] > v[static_cast<std::size_t>(y)];
  });
  const auto l = static_cast<std::ptrdiff_t>(std::count_if(v.begin(), v.end(), [](int x) { return x > 0; }));
  std::vector<std::vector<int>> out;
  // The zero parts occupy base[l..]; they are in ascending order already.
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin() + l, base.end()));
  return out;
}

QRat cor1_closed(std::span<const int> v, std::span<const int> a, std::span<const int> sigma) {
  const Cor1Plan plan = plan_cor1(v, a, sigma);
  const int total = weight(a);
  const std::size_t len = v.size();
  QRat r = QRat::q_power(plan.c);
  int consumed = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(plan.l); ++i) {
    const auto k = static_cast<std::size_t>(plan.sigma[i]);
    // x_k carries a positive exponent in x^{-v} but no letter and no
    // positive power in the Dyson product.
    if (a[k] == 0) return {};
    r *= qbinom(v[k] + total - consumed - 1, a[k] - 1);
    consumed += a[k];
  }
  for (std::size_t i = static_cast<std::size_t>(plan.l); i < len; ++i) {
    int tail = 0;
    for (std::size_t t = i; t < len; ++t) tail += a[static_cast<std::size_t>(plan.sigma[t])];
    r *= qbinom(tail, a[static_cast<std::size_t>(plan.sigma[i])]);
  }
  return r;
}

QRat cor1_closed(std::span<const int> v, std::span<const int> a) {
  const Cor1Plan plan = plan_cor1(v, a);
  return cor1_closed(v, a, plan.sigma);
}

}  // namespace qdyson
