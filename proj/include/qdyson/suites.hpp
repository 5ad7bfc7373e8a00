#pragma once

// Verification suites: every closed form and structural identity for the
// constant terms, checked exactly against brute-force expansion on small
// parameter boxes.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdyson/dyson.hpp"

namespace qdyson {

struct Violation {
  CTQuery query;
  std::optional<QRat> expected;  // absent when only "nonzero" was expected
  QLaurent got;
  std::string note;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  double elapsed_s = 0.0;

  bool passed() const { return violations.empty(); }
  void absorb(Report other);
};

/// Worker count: QDYSON_THREADS if set and positive, else `fallback`, else
/// the hardware concurrency.
int resolve_workers(int fallback = 0);

/// Runs job(i) for i in [0, count) on `workers` threads. Each job returns
/// the number of checks it made and appends its violations; results are
/// merged in index order and violations sorted by query.
Report run_jobs(std::size_t count, const std::function<Report(std::size_t)>& job, int workers);

struct SuiteBox {
  int n = 1;
  int max_a = 2;
  int min_a = 0;
  int max_weight = 4;
  int max_r = 4;
  int workers = 0;  // 0: resolve_workers()
};

Report verify_qdyson(const SuiteBox& box);
// Both branches: every composition v of weight 1..max_r.
Report verify_kadell(const SuiteBox& box);
// Unique-max compositions with |v| <= max_weight; a in {max(min_a,1)..max_a}.
Report verify_thm1(const SuiteBox& box);
// Recursion checked on the worked shape v = (0,2,3,2,1), a = (1,1,1,1,1).
Report verify_thm1_worked_example();
// Brute force, sigma-independence, and the l = 0 / l = 1 reductions.
Report verify_cor1(const SuiteBox& box);
// Recursion for every m in 1..n+1 plus the a_0 = 1 specialization.
Report verify_thm2(const SuiteBox& box);

/// Contrapositive of the dominance orthogonality: D_{v,lambda}(a) = 0 for
/// every v in Z^{n+1} with sum |v_i| <= weight_max and every partition
/// lambda of |v| with v+ not dominating lambda.
Report cai_scan(int n, int weight_max, int a_max, int workers = 0);

/// D_{v,lambda}(a, m) = 0 for compositions v, lambda >= v+ in dominance,
/// lambda_0 > max v, every m in 0..n+1.
Report strict_vanishing_scan(int n, int weight_max, int a_max, int workers = 0);

/// Evidence for the converse: D_{v,lambda}(a) != 0 whenever v+ >= lambda,
/// v a composition with |v| <= weight_max, 1 <= a_i <= a_max.
Report converse_scan(int n, int weight_max, int a_max, int workers = 0);

/// The query set enumerated by converse_scan, in canonical order.
std::vector<CTQuery> converse_queries(int n, int weight_max, int a_max);

struct RootsAnalysis {
  Report report;
  int degree_bound = 0;     // a_1 + ... + a_n + v_0
  int observed_degree = -1; // of the interpolant in t = q^{a_0}; -1 for zero
  std::vector<QRat> coefficients;
};

/// Polynomiality in t = q^{a_0}, the root set t = q^{-j}, j < degree_bound,
/// and (m >= 1) the value at a_0 = 1.
RootsAnalysis roots_analyze(std::span<const int> v, std::span<const int> a_rest, int m);
Report roots_verify(std::span<const int> v, std::span<const int> a_rest, int m);

/// Cyclic-action relations for one query with 0 <= m <= n.
Report gamma_check(const CTQuery& query);
/// A fixed list of small queries for gamma_check.
std::vector<CTQuery> gamma_queries();
Report verify_gamma(int workers = 0);

/// Plethystic identities on alphabets (addition, negation, vanishing of
/// e_r, principal specialization, x_0-degree bound, homogeneity).
Report verify_symfunc();

/// Suite dispatch by name; nullopt for an unknown name.
std::optional<Report> run_suite(const std::string& name, const SuiteBox& box);
std::vector<std::string> suite_names();

}  // namespace qdyson
