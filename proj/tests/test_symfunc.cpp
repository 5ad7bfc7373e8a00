#include "qdyson/symfunc.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "oracle.hpp"
#include "qdyson/suites.hpp"

using namespace qdyson;

namespace {

Letter x(int var, int qexp) { return Letter{qexp, var}; }
Letter pure(int qexp) { return Letter{qexp, std::nullopt}; }

MultiPoly x0_times(int nvars, int degree, const QLaurent& c) {
  ExpVec e(nvars, 0);
  e[0] = degree;
  return MultiPoly::monomial(e, c);
}

// Sum over r-subsets of letter positions, straight from the definition.
MultiPoly e_by_subsets(const std::vector<Letter>& letters, int nvars, int r) {
  MultiPoly out(nvars);
  const int n = static_cast<int>(letters.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    MultiPoly term = MultiPoly::constant(nvars, QLaurent(1));
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) term = term * letter_monomial(letters[i], nvars);
    }
    out += term;
  }
  return out;
}

Alphabet random_positive(std::mt19937& rng, int nvars, int max_letters) {
  std::uniform_int_distribution<int> count(0, max_letters), var(-1, nvars - 1), qexp(-2, 3);
  std::vector<Letter> ls;
  for (int i = count(rng); i > 0; --i) {
    const int v = var(rng);
    ls.push_back(v < 0 ? pure(qexp(rng)) : x(v, qexp(rng)));
  }
  return Alphabet(nvars, ls);
}

}  // namespace

TEST_CASE("build_alphabet examples") {
  const std::vector<int> a2{2};
  CHECK(build_alphabet(a2, 0) == Alphabet(1, {x(0, 0), x(0, 1)}));
  const std::vector<int> a11{1, 1};
  CHECK(build_alphabet(a11, 1) == Alphabet(2, {x(0, -1), x(1, 0)}));
  const std::vector<int> zeros{0, 0, 0};
  for (int m = 0; m <= 3; ++m) CHECK(build_alphabet(zeros, m).plus().empty());

  CHECK_THROWS_AS(build_alphabet(a11, 3), UsageError);
  CHECK_THROWS_AS(build_alphabet(a11, -1), UsageError);
  const std::vector<int> neg{1, -1};
  CHECK_THROWS_AS(build_alphabet(neg, 0), UsageError);
}

TEST_CASE("build_alphabet has |a| letters for every m") {
  const std::vector<int> a{2, 0, 3};
  for (int m = 0; m <= 3; ++m) {
    const Alphabet al = build_alphabet(a, m);
    CHECK(al.is_positive());
    CHECK(al.plus().size() == 5);
  }
}

TEST_CASE("letters cancel across the two sides") {
  const Alphabet d(2, {x(0, 0), x(1, 2), pure(1)}, {x(1, 2), pure(3)});
  CHECK(d.plus() == std::vector<Letter>{x(0, 0), pure(1)});
  CHECK(d.minus() == std::vector<Letter>{pure(3)});
  CHECK((d - d).plus().empty());
  CHECK((d - d).minus().empty());
  CHECK(-(-d) == d);
}

TEST_CASE("h_r examples") {
  const std::vector<int> a2{2};
  const Alphabet X = build_alphabet(a2, 0);
  CHECK(h_r(X, 0) == MultiPoly::constant(1, QLaurent(1)));
  CHECK(h_r(Alphabet(3), 0) == MultiPoly::constant(3, QLaurent(1)));
  CHECK(h_r(Alphabet(3), 2).is_zero());
  CHECK(h_r(X, 1) == x0_times(1, 1, QLaurent(1) + QLaurent::q_power(1)));
  CHECK(h_r(Alphabet(1, {}, {x(0, 0)}), 2).is_zero());
}

TEST_CASE("e_r examples") {
  const std::vector<int> a2{2};
  const Alphabet X = build_alphabet(a2, 0);
  CHECK(e_r(X, 0) == MultiPoly::constant(1, QLaurent(1)));
  CHECK(e_r(X, 2) == x0_times(1, 2, QLaurent::q_power(1)));
  CHECK(e_r(X, 3).is_zero());
  CHECK(e_r(Alphabet(2, {x(0, 0), x(1, 4)}), 3).is_zero());
  CHECK_THROWS_AS(e_r(Alphabet(1, {}, {x(0, 0)}), 1), UsageError);
}

TEST_CASE("h_lambda examples") {
  const std::vector<int> a2{2};
  const Alphabet X = build_alphabet(a2, 0);
  CHECK(h_lambda(X, std::vector<int>{}) == MultiPoly::constant(1, QLaurent(1)));

  const Alphabet single(1, {x(0, 0)});
  CHECK(h_lambda(single, std::vector<int>{1, 1}) == x0_times(1, 2, QLaurent(1)));

  const QRat principal = poch(2, 2) / poch(1, 2);
  CHECK(principal.is_laurent());
  CHECK(h_lambda(X, std::vector<int>{2}) == x0_times(1, 2, principal.num()));
  CHECK(principal.num() == QLaurent(1) + QLaurent::q_power(1) + QLaurent::q_power(2));

  CHECK_THROWS_AS(h_lambda(X, std::vector<int>{1, 2}), UsageError);
  CHECK_THROWS_AS(h_lambda(X, std::vector<int>{1, -1}), UsageError);
}

TEST_CASE("h_lambda on the shifted alphabets agrees with multiset enumeration") {
  const std::vector<std::vector<int>> as{{2, 1}, {1, 0, 2}, {1, 1, 1}, {3}};
  const std::vector<std::vector<int>> lambdas{{}, {1}, {2}, {1, 1}, {3, 1}, {2, 2, 1}};
  for (const auto& a : as) {
    const int nvars = static_cast<int>(a.size());
    for (int m = 0; m <= nvars; ++m) {
      for (const auto& lambda : lambdas) {
        MultiPoly expect(nvars);
        for (const auto& mono : oracle::h_lambda_monomials(a, m, lambda)) expect.add_term(mono.x, QLaurent::q_power(mono.q));
        CHECK(h_lambda(build_alphabet(a, m), lambda) == expect);
      }
    }
  }
}

TEST_CASE("e_r agrees with subset enumeration") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Alphabet X = random_positive(rng, 2, 5);
    for (int r = 0; r <= 6; ++r) CHECK(e_r(X, r) == e_by_subsets(X.plus(), 2, r));
  }
}

TEST_CASE("plethystic addition and negation") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Alphabet X = random_positive(rng, 2, 4);
    const Alphabet Y = random_positive(rng, 2, 4);
    const auto hx = h_upto(X, 5), hy = h_upto(Y, 5), hxy = h_upto(X + Y, 5);
    for (int r = 0; r <= 5; ++r) {
      MultiPoly sum(2);
      for (int i = 0; i <= r; ++i) sum += hx[i] * hy[r - i];
      CHECK(hxy[r] == sum);

      MultiPoly dual = e_r(X, r);
      if (r % 2) dual = dual.scaled(QLaurent(-1));
      CHECK(h_r(-X, r) == dual);
    }
  }
}

TEST_CASE("signed h_r follows the difference rule") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const Alphabet P = random_positive(rng, 2, 3);
    const Alphabet M = random_positive(rng, 2, 3);
    for (int r = 0; r <= 4; ++r) {
      MultiPoly expect(2);
      for (int i = 0; i <= r; ++i) {
        MultiPoly t = h_r(P, i) * e_by_subsets(M.plus(), 2, r - i);
        if ((r - i) % 2) t = t.scaled(QLaurent(-1));
        expect += t;
      }
      CHECK(h_r(P - M, r) == expect);
    }
  }
}

TEST_CASE("principal specialization") {
  for (int a = 1; a <= 5; ++a) {
    for (int r = 0; r <= 5; ++r) {
      const QRat expect = poch(a, r) / poch(1, r);
      const MultiPoly h = h_r(principal_alphabet(1, a), r);
      CHECK(h == MultiPoly::constant(1, expect.as_laurent()));
      CHECK(expect.num() == oracle::to_laurent(oracle::gauss(a + r - 1, r)));
    }
  }
}

TEST_CASE("homogeneity") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const Alphabet X = random_positive(rng, 3, 4);
    bool has_pure = false;
    for (const auto& l : X.plus()) has_pure = has_pure || !l.var;
    for (int r = 0; r <= 4; ++r) {
      const MultiPoly h = h_r(X, r);
      for (const auto& [e, c] : h.terms()) {
        int deg = 0;
        for (int v : e) deg += v;
        CHECK(deg <= r);
        if (!has_pure) CHECK(deg == r);
      }
    }
  }
}

TEST_CASE("x_0-degree of h_r[Y - q^{n_i} x_0] is at most min(r, d)") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> qexp(-2, 3);
  for (int d = 0; d <= 4; ++d) {
    for (int r = 0; r <= 4; ++r) {
      std::vector<Letter> minus;
      for (int i = 0; i < d; ++i) minus.push_back(x(0, qexp(rng)));
      const Alphabet bare(2, {}, minus);
      const Alphabet withY(2, {x(1, 0), x(1, 2), pure(1)}, minus);
      if (d < r) CHECK(h_r(bare, r).is_zero());
      for (const Alphabet& X : {bare, withY}) {
        const MultiPoly h = h_r(X, r);
        for (const auto& [e, c] : h.terms()) CHECK(e[0] <= std::min(r, d));
      }
    }
  }
}

TEST_CASE("symfunc suite") {
  const Report r = verify_symfunc();
  CHECK(r.checked > 0);
  CHECK(r.passed());
}
