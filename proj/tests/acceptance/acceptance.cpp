// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// equality of canonical forms; a criterion also fails if it overruns its
// time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qdyson/suites.hpp"

using namespace qdyson;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Report()> run;
};

SuiteBox box(int n, int max_a, int max_weight = 0, int min_a = 0, int max_r = 0) {
  SuiteBox b;
  b.n = n;
  b.max_a = max_a;
  b.min_a = min_a;
  b.max_weight = max_weight;
  b.max_r = max_r;
  return b;
}

Report merged(std::initializer_list<std::function<Report()>> parts) {
  Report out;
  for (const auto& p : parts) out.absorb(p());
  return out;
}

std::vector<Criterion> criteria() {
  return {
      {1, "q-Dyson identity (n=1 a<=4, n=2 a<=3, n=3 a<=2)", 120,
       [] {
         return merged({[] { return verify_qdyson(box(1, 4)); }, [] { return verify_qdyson(box(2, 3)); },
                        [] { return verify_qdyson(box(3, 2)); }});
       }},
      {2, "Kadell's formula, both branches (n<=2, 1<=r<=4, a<=2)", 120,
       [] {
         return merged({[] { return verify_kadell(box(0, 2, 0, 0, 4)); }, [] { return verify_kadell(box(1, 2, 0, 0, 4)); },
                        [] { return verify_kadell(box(2, 2, 0, 0, 4)); }});
       }},
      {3, "unique-max recursion (n<=2, |v|<=5, 1<=a<=2, worked shape (0,2,3,2,1))", 300,
       [] {
         return merged({[] { return verify_thm1(box(1, 2, 5, 1)); }, [] { return verify_thm1(box(2, 2, 5, 1)); },
                        [] { return verify_thm1_worked_example(); }});
       }},
      {4, "distinct-parts product formula, sigma independence, l=0/l=1 (n<=2, |v|<=5, a<=2)", 180,
       [] {
         return merged({[] { return verify_cor1(box(0, 2, 5)); }, [] { return verify_cor1(box(1, 2, 5)); },
                        [] { return verify_cor1(box(2, 2, 5)); }});
       }},
      {5, "shifted recursion for m in 1..n+1 and the a_0=1 value (n<=2, |v|<=4, a<=2)", 180,
       [] { return merged({[] { return verify_thm2(box(1, 2, 4)); }, [] { return verify_thm2(box(2, 2, 4)); }}); }},
      {6, "dominance orthogonality (n=1 weight 5, n=2 weight 4, a<=2) and strict vanishing", 300,
       [] {
         return merged({[] { return cai_scan(1, 5, 2); }, [] { return cai_scan(2, 4, 2); },
                        [] { return strict_vanishing_scan(1, 5, 2); }, [] { return strict_vanishing_scan(2, 4, 2); }});
       }},
      {7, "converse evidence: no vanishing for v+ >= lambda (n=1, |v|<=8, 1<=a<=3)", 600,
       [] { return converse_scan(1, 8, 3); }},
      {8, "polynomiality in q^{a_0} and its root set", 300,
       [] {
         Report out;
         for (int a1 = 0; a1 <= 2; ++a1) {
           for (int m = 0; m <= 2; ++m) out.absorb(roots_verify(IntVec{1, 0}, IntVec{a1}, m));
         }
         for (int m = 0; m <= 2; ++m) out.absorb(roots_verify(IntVec{2, 1}, IntVec{1}, m));
         for (int m = 0; m <= 3; ++m) out.absorb(roots_verify(IntVec{2, 0, 1}, IntVec{1, 1}, m));
         return out;
       }},
      {9, "plethystic identities on alphabets", 60, [] { return verify_symfunc(); }},
      {10, "cyclic action relations on 20 queries", 60, [] { return verify_gamma(); }},
  };
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      const Report r = c.run();
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      ok = r.passed() && r.checked > 0 && secs <= c.budget_s;
      char buf[160];
      std::snprintf(buf, sizeof buf, "checked %zu, violations %zu, %.2f s (budget %.0f s)", r.checked,
                    r.violations.size(), secs, c.budget_s);
      detail = buf;
      for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) {
        const auto& v = r.violations[i];
        detail += "\n    " + v.query.to_string() + " got " + v.got.to_string();
        if (v.expected) detail += " expected " + v.expected->to_string();
        if (!v.note.empty()) detail += " (" + v.note + ")";
      }
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d: %s -- %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
