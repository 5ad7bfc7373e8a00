#include "qdyson/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace qdyson {

namespace {

using Clock = std::chrono::steady_clock;

CTQuery make_query(const IntVec& v, const IntVec& lambda, const IntVec& a, int m) {
  CTQuery q;
  q.n = static_cast<int>(v.size()) - 1;
  q.v = v;
  q.lambda = lambda;
  q.a = a;
  q.m = m;
  return q;
}

IntVec plus_of(const IntVec& v) {
  IntVec p = sort_desc(v);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// One exact identity check: got must equal expected.
void expect_equal(Report& r, const CTQuery& q, const QRat& expected, const QLaurent& got, std::string note = {}) {
  ++r.checked;
  if (expected == QRat(got)) return;
  r.violations.push_back(Violation{q, expected, got, std::move(note)});
}

void expect_zero(Report& r, const CTQuery& q, const QLaurent& got, std::string note = {}) {
  expect_equal(r, q, QRat(), got, std::move(note));
}

// Violation for a value that is a QRat rather than a Laurent polynomial.
void expect_equal_rat(Report& r, const CTQuery& q, const QRat& expected, const QRat& got, const std::string& what) {
  ++r.checked;
  if (expected == got) return;
  r.violations.push_back(Violation{q, expected, got.num(), what + ": got " + got.to_string()});
}

std::vector<IntVec> a_box(int len, int lo, int hi) { return box_vectors(len, lo, hi); }

// Integer vectors with sum |v_i| <= max_l1 and non-negative total.
std::vector<IntVec> signed_vectors(int len, int max_l1) {
  std::vector<IntVec> out;
  for (auto& v : box_vectors(len, -max_l1, max_l1)) {
    int l1 = 0;
    for (int x : v) l1 += std::abs(x);
    if (l1 <= max_l1 && weight(v) >= 0) out.push_back(std::move(v));
  }
  return out;
}

void finish(Report& r, Clock::time_point start) {
  std::stable_sort(r.violations.begin(), r.violations.end(),
                   [](const Violation& x, const Violation& y) { return x.query < y.query; });
  r.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

void Report::absorb(Report other) {
  checked += other.checked;
  for (auto& v : other.violations) violations.push_back(std::move(v));
  elapsed_s += other.elapsed_s;
}

int resolve_workers(int fallback) {
  if (const char* env = std::getenv("QDYSON_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  if (fallback > 0) return fallback;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Report run_jobs(std::size_t count, const std::function<Report(std::size_t)>& job, int workers) {
  const auto start = Clock::now();
  std::vector<Report> results(count);
  const int nthreads = std::max(1, std::min<int>(resolve_workers(workers), static_cast<int>(count)));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = job(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            results[i] = job(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  Report merged;
  for (auto& r : results) {
    merged.checked += r.checked;
    for (auto& v : r.violations) merged.violations.push_back(std::move(v));
  }
  finish(merged, start);
  return merged;
}

// ---------------------------------------------------------------------------
// Closed-form suites

Report verify_qdyson(const SuiteBox& box) {
  const auto as = a_box(box.n + 1, box.min_a, box.max_a);
  return run_jobs(
      as.size(),
      [&](std::size_t i) {
        Report r;
        const IntVec zero(as[i].size(), 0);
        const CTQuery q = make_query(zero, {}, as[i], 0);
        expect_equal(r, q, qdyson_rhs(as[i]), compute_D(q), "q-Dyson");
        return r;
      },
      box.workers);
}

Report verify_kadell(const SuiteBox& box) {
  const auto as = a_box(box.n + 1, box.min_a, box.max_a);
  return run_jobs(
      as.size(),
      [&](std::size_t i) {
        Report r;
        const IntVec& a = as[i];
        for (int rr = 1; rr <= box.max_r; ++rr) {
          for (const auto& v : compositions_up_to(box.n + 1, rr)) {
            if (weight(v) != rr) continue;
            const bool single_hot = std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }) == 1;
            if (single_hot && weight(a) == 0) continue;  // pole of the closed form
            const CTQuery q = make_query(v, {rr}, a, 0);
            expect_equal(r, q, kadell_rhs(v, a), compute_D(q), single_hot ? "Kadell single-hot" : "Kadell vanishing");
          }
        }
        return r;
      },
      box.workers);
}

Report verify_thm1(const SuiteBox& box) {
  if (box.n < 1) return {};
  const auto as = a_box(box.n + 1, std::max(1, box.min_a), box.max_a);
  const auto vs = compositions_up_to(box.n + 1, box.max_weight);
  return run_jobs(
      as.size(),
      [&](std::size_t i) {
        Report r;
        for (const auto& v : vs) {
          if (unique_max_index(v) < 0) continue;
          const RecursionStep step = thm1_step(v, as[i]);
          const CTQuery q = make_query(v, plus_of(v), as[i], 0);
          expect_equal(r, q, step.factor * QRat(compute_D(step.reduced)), compute_D(q), "thm1 recursion");
        }
        return r;
      },
      box.workers);
}

Report verify_thm1_worked_example() {
  const auto start = Clock::now();
  Report r;
  const IntVec v{0, 2, 3, 2, 1};
  const IntVec a{1, 1, 1, 1, 1};
  const RecursionStep step = thm1_step(v, a);
  const CTQuery q = make_query(v, plus_of(v), a, 0);
  ++r.checked;
  if (step.reduced.v != IntVec{0, 2, 2, 1} || plus_of(v) != IntVec{3, 2, 2, 1}) {
    r.violations.push_back(Violation{q, std::nullopt, {}, "worked example: wrong reduction " + step.reduced.to_string()});
  }
  expect_equal(r, q, step.factor * QRat(compute_D(step.reduced)), compute_D(q), "thm1 worked example");
  finish(r, start);
  return r;
}

Report verify_cor1(const SuiteBox& box) {
  const auto as = a_box(box.n + 1, box.min_a, box.max_a);
  std::vector<IntVec> vs;
  for (auto& v : compositions_up_to(box.n + 1, box.max_weight)) {
    IntVec pos;
    for (int x : v) {
      if (x > 0) pos.push_back(x);
    }
    std::sort(pos.begin(), pos.end());
    if (std::adjacent_find(pos.begin(), pos.end()) == pos.end()) vs.push_back(std::move(v));
  }
  return run_jobs(
      as.size(),
      [&](std::size_t i) {
        Report r;
        const IntVec& a = as[i];
        for (const auto& v : vs) {
          const CTQuery q = make_query(v, plus_of(v), a, 0);
          const QRat closed = cor1_closed(v, a);
          expect_equal(r, q, closed, compute_D(q), "cor1 closed form");
          for (const auto& sigma : admissible_sigmas(v)) {
            const QRat alt = cor1_closed(v, a, sigma);
            ++r.checked;
            if (!(alt == closed)) {
              r.violations.push_back(Violation{q, closed, alt.num(), "cor1 depends on sigma: " + alt.to_string()});
            }
          }
          const Cor1Plan plan = plan_cor1(v, a);
          if (plan.l == 0) {
            expect_equal_rat(r, q, qdyson_rhs(a), closed, "cor1 l=0 vs q-Dyson");
          } else if (plan.l == 1 && weight(a) > 0) {
            expect_equal_rat(r, q, kadell_rhs(v, a), closed, "cor1 l=1 vs Kadell");
          }
        }
        return r;
      },
      box.workers);
}

Report verify_thm2(const SuiteBox& box) {
  if (box.n < 1) return {};
  std::vector<IntVec> as;
  for (auto& a : a_box(box.n + 1, box.min_a, box.max_a)) {
    if (a[0] >= 1) as.push_back(std::move(a));
  }
  std::vector<IntVec> vs;
  for (auto& v : compositions_up_to(box.n + 1, box.max_weight)) {
    if (unique_max_index(v) == 0) vs.push_back(std::move(v));
  }
  return run_jobs(
      as.size(),
      [&](std::size_t i) {
        Report r;
        const IntVec& a = as[i];
        const IntVec a_rest(a.begin() + 1, a.end());
        for (const auto& v : vs) {
          for (int m = 1; m <= box.n + 1; ++m) {
            const CTQuery q = make_query(v, plus_of(v), a, m);
            const QLaurent lhs = compute_D(q);
            const RecursionStep step = thm2_step(v, a, m);
            expect_equal(r, q, step.factor * QRat(compute_D(step.reduced)), lhs, "thm2 recursion");
            if (a[0] == 1) {
              const RecursionStep one = a0_one_step(v, a_rest, m);
              expect_equal(r, q, one.factor * QRat(compute_D(one.reduced)), lhs, "value at a_0 = 1");
            }
          }
        }
        return r;
      },
      box.workers);
}

// ---------------------------------------------------------------------------
// Orthogonality scans

Report cai_scan(int n, int weight_max, int a_max, int workers) {
  const auto as = a_box(n + 1, 0, a_max);
  std::vector<std::pair<IntVec, IntVec>> pairs;
  for (const auto& v : signed_vectors(n + 1, weight_max)) {
    const IntVec vp = sort_desc(v);
    for (auto& lambda : partitions_of(weight(v))) {
      if (dominance_ge(vp, lambda)) continue;
      pairs.emplace_back(v, std::move(lambda));
    }
  }
  return run_jobs(
      as.size(),
      [&](std::size_t i) {
        Report r;
        for (const auto& [v, lambda] : pairs) {
          const CTQuery q = make_query(v, lambda, as[i], 0);
          expect_zero(r, q, compute_D(q), "v+ does not dominate lambda");
        }
        return r;
      },
      workers);
}

Report strict_vanishing_scan(int n, int weight_max, int a_max, int workers) {
  const auto as = a_box(n + 1, 0, a_max);
  std::vector<std::pair<IntVec, IntVec>> pairs;
  for (const auto& v : compositions_up_to(n + 1, weight_max)) {
    const IntVec vp = sort_desc(v);
    for (auto& lambda : partitions_of(weight(v))) {
      if (!dominance_ge(lambda, vp) || lambda.empty() || lambda[0] <= vp[0]) continue;
      pairs.emplace_back(v, std::move(lambda));
    }
  }
  return run_jobs(
      as.size(),
      [&](std::size_t i) {
        Report r;
        for (const auto& [v, lambda] : pairs) {
          for (int m = 0; m <= n + 1; ++m) {
            const CTQuery q = make_query(v, lambda, as[i], m);
            expect_zero(r, q, compute_D(q), "lambda >= v+ with lambda_0 > max v");
          }
        }
        return r;
      },
      workers);
}

std::vector<CTQuery> converse_queries(int n, int weight_max, int a_max) {
  std::vector<CTQuery> out;
  const auto as = a_box(n + 1, 1, a_max);
  for (const auto& v : compositions_up_to(n + 1, weight_max)) {
    const IntVec vp = sort_desc(v);
    for (const auto& lambda : partitions_of(weight(v))) {
      if (!dominance_ge(vp, lambda)) continue;
      for (const auto& a : as) out.push_back(make_query(v, lambda, a, 0));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report converse_scan(int n, int weight_max, int a_max, int workers) {
  const auto queries = converse_queries(n, weight_max, a_max);
  return run_jobs(
      queries.size(),
      [&](std::size_t i) {
        Report r;
        ++r.checked;
        const QLaurent got = compute_D(queries[i]);
        if (got.is_zero()) r.violations.push_back(Violation{queries[i], std::nullopt, got, "expected nonzero"});
        return r;
      },
      workers);
}

// ---------------------------------------------------------------------------
// Polynomiality and roots in q^{a_0}

RootsAnalysis roots_analyze(std::span<const int> v, std::span<const int> a_rest, int m) {
  const auto start = Clock::now();
  const int n = static_cast<int>(a_rest.size());
  if (static_cast<int>(v.size()) != n + 1) throw UsageError("roots_verify: v must have one more entry than a_rest");
  for (int x : v) {
    if (x < 0) throw PreconditionError("roots_verify: v must be a composition");
  }
  for (int x : a_rest) {
    if (x < 0) throw UsageError("roots_verify: a has a negative entry");
  }
  if (unique_max_index(v) != 0) throw PreconditionError("roots_verify: v_0 must be the unique maximum");
  if (m < 0 || m > n + 1) throw UsageError("roots_verify: m must lie in 0.." + std::to_string(n + 1));

  RootsAnalysis out;
  const int d = weight(a_rest) + v[0];
  out.degree_bound = d;
  const IntVec vv(v.begin(), v.end());
  const IntVec lambda = plus_of(vv);
  auto query_at = [&](int a0) {
    IntVec a{a0};
    a.insert(a.end(), a_rest.begin(), a_rest.end());
    return make_query(vv, lambda, a, m);
  };

  std::vector<QLaurent> y;
  for (int j = 0; j <= d + 1; ++j) y.push_back(compute_D(query_at(j)));
  std::vector<std::pair<QRat, QRat>> points;
  for (int j = 0; j <= d; ++j) points.emplace_back(QRat::q_power(j), QRat(y[static_cast<std::size_t>(j)]));
  out.coefficients = interpolate(points);
  for (int i = d; i >= 0; --i) {
    if (!out.coefficients[static_cast<std::size_t>(i)].is_zero()) {
      out.observed_degree = i;
      break;
    }
  }

  Report& r = out.report;
  // Degree bound: the degree-<=d interpolant predicts the next value.
  const QRat predicted = evaluate_polynomial(out.coefficients, QRat::q_power(d + 1));
  expect_equal(r, query_at(d + 1), predicted, y.back(), "degree bound in q^{a_0}");
  for (int j = 0; j < d; ++j) {
    const QRat value = evaluate_polynomial(out.coefficients, QRat::q_power(-j));
    expect_equal_rat(r, query_at(0), QRat(), value, "root at a_0 = -" + std::to_string(j));
  }
  if (m >= 1) {
    const RecursionStep one = a0_one_step(v, a_rest, m);
    const QRat at_one = evaluate_polynomial(out.coefficients, QRat::q_power(1));
    expect_equal_rat(r, query_at(1), one.factor * QRat(compute_D(one.reduced)), at_one, "value at a_0 = 1");
  }
  finish(r, start);
  return out;
}

Report roots_verify(std::span<const int> v, std::span<const int> a_rest, int m) {
  return roots_analyze(v, a_rest, m).report;
}

// ---------------------------------------------------------------------------
// Cyclic action

Report gamma_check(const CTQuery& query) {
  const auto start = Clock::now();
  query.validate();
  const int n = query.n;
  if (query.m > n) throw UsageError("gamma_check: m must lie in 0..n");
  Report r;
  const QLaurent base = compute_D(query);

  // One application of the cyclic action.
  {
    const CTQuery rotated = make_query(rotate_right(query.v), query.lambda, rotate_right(query.a), query.m + 1);
    const QLaurent rhs = compute_D(rotated).shifted(query.v.back());
    expect_equal(r, query, QRat(rhs), base, "cyclic relation");
  }
  // m = n+1 against m = 0.
  {
    CTQuery top = query;
    top.m = n + 1;
    CTQuery bottom = query;
    bottom.m = 0;
    expect_equal(r, top, QRat(compute_D(bottom).shifted(-weight(query.lambda))), compute_D(top), "m = n+1 reduction");
  }
  // Iterated relation for every k.
  for (int k = 0; k <= n; ++k) {
    IntVec v = query.v;
    IntVec a = query.a;
    for (int t = 0; t < n + 1 - k; ++t) {
      v = rotate_right(v);
      a = rotate_right(a);
    }
    int m2 = ((query.m - k) % (n + 1) + (n + 1)) % (n + 1);
    if (m2 == 0) m2 = n + 1;
    const auto uk = static_cast<std::size_t>(k);
    const int shift = query.m <= k ? weight(std::span<const int>(query.v).subspan(uk))
                                   : -weight(std::span<const int>(query.v).first(uk));
    const QLaurent rhs = compute_D(make_query(v, query.lambda, a, m2)).shifted(shift);
    expect_equal(r, query, QRat(rhs), base, "iterated cyclic relation, k = " + std::to_string(k));
  }
  // CT_x gamma(f) = CT_x f on the integrand itself.
  {
    IntVec neg(query.v.size());
    std::transform(query.v.begin(), query.v.end(), neg.begin(), [](int x) { return -x; });
    const MultiPoly integrand =
        (h_lambda(build_alphabet(query.a, query.m), query.lambda) * dyson_product(query.a)).times_monomial(neg, 0);
    const MultiPoly image = gamma_apply(integrand);
    expect_equal(r, query, QRat(integrand.constant_term()), image.constant_term(), "CT invariance under gamma");
    expect_equal(r, query, QRat(integrand.constant_term()), base, "integrand CT vs compute_D");
  }
  finish(r, start);
  return r;
}

std::vector<CTQuery> gamma_queries() {
  return {
      make_query({0, 0}, {}, {1, 1}, 0),
      make_query({1, 0}, {1}, {1, 1}, 0),
      make_query({1, 0}, {1}, {1, 1}, 1),
      make_query({0, 1}, {1}, {2, 1}, 0),
      make_query({2, 0}, {2}, {1, 2}, 1),
      make_query({2, 0}, {1, 1}, {2, 1}, 0),
      make_query({1, 1}, {2}, {1, 1}, 1),
      make_query({1, 1}, {1, 1}, {2, 2}, 0),
      make_query({-1, 2}, {1}, {1, 2}, 0),
      make_query({3, -1}, {2}, {2, 1}, 1),
      make_query({0, 0, 0}, {}, {1, 1, 1}, 0),
      make_query({1, 0, 0}, {1}, {1, 1, 1}, 0),
      make_query({0, 1, 0}, {1}, {1, 2, 1}, 1),
      make_query({0, 0, 1}, {1}, {2, 1, 1}, 2),
      make_query({2, 1, 0}, {2, 1}, {1, 1, 1}, 0),
      make_query({1, 2, 0}, {2, 1}, {1, 1, 1}, 1),
      make_query({0, 1, 2}, {3}, {1, 1, 1}, 2),
      make_query({1, 1, 1}, {2, 1}, {1, 1, 1}, 0),
      make_query({2, 0, 1}, {3}, {1, 0, 2}, 1),
      make_query({-1, 1, 2}, {2}, {1, 1, 1}, 2),
  };
}

Report verify_gamma(int workers) {
  const auto queries = gamma_queries();
  return run_jobs(queries.size(), [&](std::size_t i) { return gamma_check(queries[i]); }, workers);
}

// ---------------------------------------------------------------------------
// Plethystic identities

namespace {

void expect_poly(Report& r, const MultiPoly& expected, const MultiPoly& got, const std::string& what) {
  ++r.checked;
  if (expected == got) return;
  r.violations.push_back(Violation{CTQuery{}, std::nullopt, {}, what + ": expected " + expected.to_string() +
                                                                  ", got " + got.to_string()});
}

int total_degree(const ExpVec& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

}  // namespace

Report verify_symfunc() {
  const auto start = Clock::now();
  Report r;
  std::mt19937 rng(20240611);
  const int nvars = 3;
  auto random_letters = [&](int count) {
    std::uniform_int_distribution<int> qd(-2, 3);
    std::uniform_int_distribution<int> vd(-1, nvars - 1);  // -1: pure q letter
    std::vector<Letter> out;
    for (int i = 0; i < count; ++i) {
      const int var = vd(rng);
      out.push_back(Letter{qd(rng), var < 0 ? std::nullopt : std::optional<int>(var)});
    }
    return out;
  };
  std::uniform_int_distribution<int> size_d(0, 4);

  // Addition rule and negation rule.
  for (int trial = 0; trial < 40; ++trial) {
    const Alphabet x(nvars, random_letters(size_d(rng)));
    const Alphabet y(nvars, random_letters(size_d(rng)));
    const auto hx = h_upto(x, 5);
    const auto hy = h_upto(y, 5);
    const auto hxy = h_upto(x + y, 5);
    const auto hneg = h_upto(Alphabet(nvars) - x, 5);
    for (int k = 0; k <= 5; ++k) {
      MultiPoly sum(nvars);
      for (int i = 0; i <= k; ++i) sum += hx[static_cast<std::size_t>(i)] * hy[static_cast<std::size_t>(k - i)];
      expect_poly(r, sum, hxy[static_cast<std::size_t>(k)], "h_r[X+Y] addition rule, r = " + std::to_string(k));
      MultiPoly dual = e_r(x, k);
      if (k % 2 == 1) dual = MultiPoly(nvars) - dual;
      expect_poly(r, dual, hneg[static_cast<std::size_t>(k)], "h_r[-X] = (-1)^r e_r[X], r = " + std::to_string(k));
      if (k > static_cast<int>(x.plus().size())) {
        expect_poly(r, MultiPoly(nvars), e_r(x, k), "e_r vanishes above the cardinality");
      }
      // Homogeneity in the x variables.
      const bool has_pure = std::any_of(x.plus().begin(), x.plus().end(), [](const Letter& l) { return !l.var; });
      ++r.checked;
      bool ok = true;
      for (const auto& [e, c] : hx[static_cast<std::size_t>(k)].terms()) {
        const int deg = total_degree(e);
        if (deg > k || (!has_pure && deg != k)) ok = false;
      }
      if (!ok) r.violations.push_back(Violation{CTQuery{}, std::nullopt, {}, "h_r homogeneity, r = " + std::to_string(k)});
    }
  }

  // Principal specialization h_r[1 + q + ... + q^{a-1}] = (q^a)_r / (q)_r.
  for (int a = 1; a <= 5; ++a) {
    const auto h = h_upto(principal_alphabet(1, a), 5);
    for (int k = 0; k <= 5; ++k) {
      const QRat expected = poch(a, k) / poch(1, k);
      const QLaurent got = h[static_cast<std::size_t>(k)].constant_term();
      ++r.checked;
      if (!(expected == QRat(got)) || h[static_cast<std::size_t>(k)].size() > 1) {
        r.violations.push_back(Violation{CTQuery{}, expected, got,
                                         "principal specialization a = " + std::to_string(a) + ", r = " +
                                             std::to_string(k)});
      }
    }
  }

  // x_0-degree bound for X = Y - {q^{n_1}, ..., q^{n_d}} x_0, Y free of x_0.
  std::uniform_int_distribution<int> qd(-2, 3);
  for (int d = 0; d <= 4; ++d) {
    for (int with_y = 0; with_y <= 1; ++with_y) {
      std::vector<Letter> minus;
      for (int i = 0; i < d; ++i) minus.push_back(Letter{qd(rng), 0});
      std::vector<Letter> plus;
      if (with_y) plus = {Letter{0, 1}, Letter{1, 2}, Letter{2, std::nullopt}};
      const Alphabet x(nvars, plus, minus);
      const auto h = h_upto(x, 4);
      for (int k = 0; k <= 4; ++k) {
        const auto& hk = h[static_cast<std::size_t>(k)];
        ++r.checked;
        bool ok = true;
        for (const auto& [e, c] : hk.terms()) {
          if (e[0] > std::min(k, d) || e[0] < 0) ok = false;
        }
        if (!with_y && d < k && !hk.is_zero()) ok = false;
        if (!ok) {
          r.violations.push_back(Violation{CTQuery{}, std::nullopt, {},
                                           "x_0-degree bound, d = " + std::to_string(d) + ", r = " + std::to_string(k)});
        }
      }
    }
  }
  finish(r, start);
  return r;
}

// ---------------------------------------------------------------------------
// Dispatch

std::vector<std::string> suite_names() {
  return {"qdyson", "kadell", "thm1", "cor1", "thm2", "cai", "orth", "converse", "roots", "gamma", "symfunc"};
}

std::optional<Report> run_suite(const std::string& name, const SuiteBox& box) {
  if (name == "qdyson") return verify_qdyson(box);
  if (name == "kadell") return verify_kadell(box);
  if (name == "thm1") return verify_thm1(box);
  if (name == "cor1") return verify_cor1(box);
  if (name == "thm2") return verify_thm2(box);
  if (name == "cai") return cai_scan(box.n, box.max_weight, box.max_a, box.workers);
  if (name == "orth") return strict_vanishing_scan(box.n, box.max_weight, box.max_a, box.workers);
  if (name == "converse") return converse_scan(box.n, box.max_weight, std::max(1, box.max_a), box.workers);
  if (name == "roots") {
    const auto start = Clock::now();
    Report total;
    for (const auto& v : compositions_up_to(box.n + 1, box.max_weight)) {
      if (unique_max_index(v) != 0) continue;
      for (const auto& a_rest : a_box(box.n, box.min_a, box.max_a)) {
        for (int m = 0; m <= box.n + 1; ++m) total.absorb(roots_verify(v, a_rest, m));
      }
    }
    finish(total, start);
    return total;
  }
  if (name == "gamma") return verify_gamma(box.workers);
  if (name == "symfunc") return verify_symfunc();
  return std::nullopt;
}

}  // namespace qdyson
