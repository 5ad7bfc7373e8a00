#pragma once

// Generalized q-Dyson constant terms
//
//   D_{v,lambda}(a, m) = CT_x x^{-v} h_lambda(x_m^{(a)}) prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}
//
// by brute-force expansion, together with the closed forms and recursions
// they satisfy.

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "qdyson/laurentx.hpp"
#include "qdyson/qseries.hpp"
#include "qdyson/symfunc.hpp"

namespace qdyson {

using IntVec = std::vector<int>;

/// One constant term D_{v,lambda}(a, m) in n+1 variables.
struct CTQuery {
  int n = 0;
  IntVec v;       // any integers, length n+1
  IntVec lambda;  // weakly decreasing, non-negative
  IntVec a;       // non-negative, length n+1
  int m = 0;      // 0..n+1

  // Throws UsageError describing the first broken invariant.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const CTQuery&, const CTQuery&) = default;
  friend auto operator<=>(const CTQuery& x, const CTQuery& y) {
    return std::tie(x.n, x.v, x.lambda, x.a, x.m) <=> std::tie(y.n, y.v, y.lambda, y.a, y.m);
  }
};

enum class Expansion {
  kFull,      // expand h_lambda * Dyson product completely
  kWindowed,  // multiply factor by factor, pruning terms outside the target window
  kCached,    // cached Dyson product and h_lambda, single-coefficient pairing
};

struct ComputeOptions {
  Expansion mode = Expansion::kCached;
  // |v| != |lambda| forces D = 0 by homogeneity; skip the expansion.
  bool skip_weight_mismatch = true;
};

/// Memoizes Dyson products and h_lambda evaluations across queries. Safe to
/// share between threads.
class ConstantTermEngine {
 public:
  QLaurent compute(const CTQuery& query, const ComputeOptions& options = {});

  std::shared_ptr<const MultiPoly> dyson(const IntVec& a);
  std::shared_ptr<const MultiPoly> h_lambda_for(const IntVec& a, int m, const IntVec& lambda);

  void clear();

 private:
  std::mutex mutex_;
  std::map<IntVec, std::shared_ptr<const MultiPoly>> dyson_;
  std::map<std::tuple<IntVec, int, IntVec>, std::shared_ptr<const MultiPoly>> h_lambda_;
};

/// Process-wide engine used by compute_D.
ConstantTermEngine& default_engine();

/// Brute-force D_{v,lambda}(a, m).
QLaurent compute_D(const CTQuery& query, const ComputeOptions& options = {});

// ---------------------------------------------------------------------------
// Sequences and orders

int weight(std::span<const int> v);
IntVec sort_desc(std::span<const int> v);
/// Prefix sums of u dominate those of w after zero padding; |u| and |w|
/// may differ.
bool dominance_ge(std::span<const int> u, std::span<const int> w);
/// s with entry k removed.
IntVec drop_index(std::span<const int> s, int k);
/// (s_n, s_0, ..., s_{n-1}), the inverse cyclic shift.
IntVec rotate_right(std::span<const int> s);
/// Index of the maximum when it occurs exactly once, else -1.
int unique_max_index(std::span<const int> v);

/// All partitions of w, largest first part first; trailing zeros dropped.
std::vector<IntVec> partitions_of(int w);
/// All vectors in {min..max}^len, lexicographic.
std::vector<IntVec> box_vectors(int len, int min, int max);
/// Compositions of length len with entry sum <= max_weight, lexicographic.
std::vector<IntVec> compositions_up_to(int len, int max_weight);

// ---------------------------------------------------------------------------
// Closed forms

/// (q;q)_{|a|} / prod (q;q)_{a_i}.
QRat qdyson_rhs(std::span<const int> a);

/// Kadell's D_{v,(r)}(a), r = |v| >= 1. Zero unless v is single-hot.
/// Throws PoleError for |a| = 0 on the single-hot branch.
QRat kadell_rhs(std::span<const int> v, std::span<const int> a);

struct RecursionStep {
  QRat factor;
  CTQuery reduced;
};

/// D_{v,v+}(a) = factor * D(reduced) for a composition v whose maximum
/// occurs once at index k; needs n >= 1 and a_k >= 1.
RecursionStep thm1_step(std::span<const int> v, std::span<const int> a);

/// D_{v,v+}(a, m) = factor * D(reduced) for v_0 the unique maximum,
/// 1 <= m <= n+1, a_0 >= 1.
RecursionStep thm2_step(std::span<const int> v, std::span<const int> a, int m);

/// Value of D_{v,v+}(a, m) at a_0 = 1 as prefactor * D(reduced); a_rest
/// holds a_1..a_n.
RecursionStep a0_one_step(std::span<const int> v, std::span<const int> a_rest, int m);

struct Cor1Plan {
  int l = 0;                 // number of nonzero parts of v
  std::vector<int> sigma;    // v[sigma[i]] is weakly decreasing
  int c = 0;                 // q-exponent of the prefactor
};

/// Canonical admissible permutation (stable descending sort) for a
/// composition whose positive parts are distinct.
Cor1Plan plan_cor1(std::span<const int> v, std::span<const int> a);
Cor1Plan plan_cor1(std::span<const int> v, std::span<const int> a, std::span<const int> sigma);

/// All admissible permutations sigma with sigma(v) = v+.
std::vector<std::vector<int>> admissible_sigmas(std::span<const int> v);

/// Closed form of D_{v,v+}(a) for v with distinct positive parts. A
/// positive part sitting on a_k = 0 makes the value zero.
QRat cor1_closed(std::span<const int> v, std::span<const int> a);
QRat cor1_closed(std::span<const int> v, std::span<const int> a, std::span<const int> sigma);

}  // namespace qdyson
