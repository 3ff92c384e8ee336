#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "arpl/mr_polynomials.hpp"
#include "reference.hpp"

using namespace arpl;

namespace {
Rational r(long p, long q = 1) { return make_rational(p, q); }

// Labeled trees on {1..n} counted by inversions, brute force over Pruefer
// codes: an inversion is a pair i < j with j an ancestor of i when rooted
// at vertex 1. Sum over trees of theta^inv is J_n(theta).
Polynomial trees_by_inversions(int n) {
  if (n <= 2) return Polynomial{1};
  std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
  std::vector<Rational> counts(static_cast<std::size_t>(n * (n - 1) / 2 + 1), Rational(0));
  while (true) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[c];
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int c : code) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      adj[leaf].push_back(c);
      adj[c].push_back(leaf);
      --degree[leaf];
      --degree[c];
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i)
      if (degree[i] == 1) (u < 0 ? u : v) = i;
    adj[u].push_back(v);
    adj[v].push_back(u);
    std::vector<int> parent(static_cast<std::size_t>(n), -1), stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (parent[y] < 0) {
          parent[y] = x;
          stack.push_back(y);
        }
    }
    int inv = 0;
    for (int i = 1; i < n; ++i)
      for (int a = parent[i]; a != 0; a = parent[a])
        if (a > i) ++inv;
    counts[inv] += 1;
    int k = 0;
    while (k < n - 2 && ++code[k] == n) code[k++] = 0;
    if (k == n - 2) break;
  }
  return Polynomial(counts);
}
}  // namespace

TEST_CASE("printed coefficient tables") {
  const auto J = reference::j_table();
  const auto Jt = reference::j_tilde_table();
  const auto Jh = reference::j_hat_table();
  for (int n = 1; n <= 6; ++n) CHECK(mallows_riordan(n, Verify::On) == J[n]);
  for (int n = 2; n <= 6; ++n) CHECK(j_tilde(n, Verify::On) == Jt[n]);
  for (int n = 2; n <= 6; ++n) CHECK(j_hat(n, Verify::On) == Jh[n]);
  CHECK(mallows_riordan(3) == Polynomial{2, 1});
  CHECK(j_tilde(4) == Polynomial{0, 0, 3, 1});
  CHECK(j_hat(3) == Polynomial{4, -1});
}

TEST_CASE("J_n enumerates labeled trees by inversions") {
  for (int n = 1; n <= 7; ++n) CHECK(mallows_riordan(n) == trees_by_inversions(n));
}

TEST_CASE("index errors") {
  CHECK_THROWS_AS(mallows_riordan(0), std::out_of_range);
  CHECK_THROWS_AS(j_tilde(0), std::out_of_range);
  CHECK_THROWS_AS(j_hat(0), std::out_of_range);
  CHECK_THROWS(boundary_derivatives(1));
}

TEST_CASE("special values") {
  for (int n = 0; n <= 15; ++n) CHECK(mallows_riordan(n + 1)(0) == Rational(factorial(n)));
  for (int n = 2; n <= 12; ++n) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
    CHECK(mallows_riordan(n)(1) == Rational(v));
  }
  CHECK(mallows_riordan(5)(2) == 728);
  for (int n = 0; n <= 15; ++n) CHECK(mallows_riordan(n + 1)(-1) == Rational(zigzag(n)));
  for (int n = 0; n <= 12; ++n) CHECK(j_tilde(n + 1)(-1) == Rational(zigzag(n)));
  for (int n = 1; n <= 10; ++n) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(n - 1));
    CHECK((n % 2 ? 1 : -1) * j_tilde(n + 1)(1) == Rational(v));
  }
  for (int n = 1; n <= 12; ++n) CHECK(j_hat(n + 1)(0) == Rational(factorial(n) << (n - 1)));
}

TEST_CASE("zigzag numbers") {
  const std::vector<long> A{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
  for (int n = 0; n <= 10; ++n) CHECK(zigzag(n) == A[n]);
  for (int n = 1; n <= 12; ++n) {
    Integer s = 0;
    for (int k = 0; k <= n; ++k) s += (k % 2 ? -1 : 1) * binomial(n, k) * zigzag(k) * zigzag(n - k);
    CHECK(s == 0);
  }
}

TEST_CASE("independent routes agree exactly") {
  const int N = 10;
  const auto j = routes::j_recurrence(N);
  CHECK(routes::j_log_e(N) == j);
  CHECK(routes::j_ratio(N) == j);
  CHECK(routes::j_linear(N) == j);
  CHECK(routes::j_gessel(N) == j);
  const auto jt = routes::jt_inverse(N);
  CHECK(routes::jt_recurrence(N) == jt);
  CHECK(routes::jt_alternate(N) == jt);
  CHECK(routes::jt_exp(N) == jt);
  const auto jh = routes::jh_sum(N);
  CHECK(routes::jh_recurrence(N) == jh);
  CHECK(routes::jh_series(N) == jh);
  for (int n = 1; n <= N; ++n) {
    CHECK(mallows_riordan(n) == j[n]);
    CHECK(j_tilde(n) == jt[n]);
    CHECK(j_hat(n) == jh[n]);
  }
}

TEST_CASE("structural invariants") {
  for (int n = 1; n <= 12; ++n) {
    const int deg = n * (n - 1) / 2;
    const auto& J = mallows_riordan(n + 1);
    CHECK(J.degree() == deg);
    CHECK(J.leading() == 1);
    CHECK(J.is_integral());
    for (int k = 0; k <= deg; ++k) CHECK(J[k] > 0);
    const auto& Jt = j_tilde(n + 1);
    CHECK(Jt.degree() == deg);
    CHECK(Jt.valuation() == n - 1);
    for (int k = n - 1; k <= deg; ++k) CHECK(sign(Jt[k]) == (n % 2 ? 1 : -1));
    const auto& Jh = j_hat(n + 1);
    CHECK(Jh.degree() == deg);
    CHECK(Jh[0] == Rational(factorial(n) << (n - 1)));
    for (int k = 1; k <= deg; ++k) CHECK(Jh[k] < 0);
  }
}

TEST_CASE("C_n relation") {
  for (int n = 1; n <= 8; ++n) {
    const Rational t = r(-3, 2);
    CHECK(c_poly(n)(t) == pow(-t, -(n - 1)) * j_tilde(n + 1)(t));
  }
}

TEST_CASE("J_n is positive and nondecreasing on [-1, 3]") {
  for (int n = 1; n <= 12; ++n) {
    Rational prev = 0;
    for (Rational t = -1; t <= 3; t += r(1, 8)) {
      const Rational v = mallows_riordan(n)(t);
      CHECK(v > 0);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("scaled value recurrences match the polynomials") {
  for (const Rational& t : {r(1, 3), r(-2), r(5, 2)}) {
    const auto c = j_scaled_values(t, 12);
    const auto d = j_tilde_scaled_values(t, 12);
    const auto e = j_hat_scaled_values(t, 12);
    for (int n = 0; n <= 12; ++n) {
      const Rational nf(factorial(n));
      CHECK(c[n] == mallows_riordan(n + 1)(t) / nf);
      CHECK(d[n] == j_tilde(n + 1)(t) / nf);
      CHECK(e[n] == j_hat(n + 1)(t) / (nf * pow(Rational(2), n)));
    }
  }
  const auto fp = j_scaled_values_fp(0.5, 10);
  const auto ex = j_scaled_values(r(1, 2), 10);
  for (int n = 0; n <= 10; ++n) CHECK(fp[n] == doctest::Approx(to_double(ex[n])).epsilon(1e-13));
}

TEST_CASE("derivatives at theta = -1") {
  for (int n = 0; n <= 12; ++n) {
    const auto dJ = mallows_riordan(n + 1).derivative()(-1);
    if (n <= 1)
      CHECK(dJ == 0);
    else
      CHECK(dJ == r(n, 2) * mallows_riordan(n + 1)(-1));
    CHECK(j_tilde(n + 1).derivative()(-1) == -dJ);
  }
  for (int n = 2; n <= 12; ++n) {
    const auto bd = boundary_derivatives(n);
    CHECK(bd.left_p1 == bd.right_p1);
    CHECK(bd.left_p2 - bd.right_p2 == Rational(zigzag(n - 2)) / Rational(factorial(n - 2) << n));
  }
}

TEST_CASE("nested integral volume") {
  CHECK(nested_volume(1) == Polynomial{-1, 1});
  CHECK(nested_volume(2) == Polynomial(std::vector<Rational>{r(1), r(-3, 2), r(0), r(1, 2)}));
  const Polynomial tm1{-1, 1};
  for (int n = 1; n <= 10; ++n)
    CHECK(nested_volume(n) == tm1.pow(n) * mallows_riordan(n + 1) / Rational(factorial(n)));
}

TEST_CASE("complete-graph Tutte polynomials") {
  CHECK(tutte_complete(1).by_x == std::vector<Polynomial>{Polynomial(), Polynomial{1}});
  const auto K4 = tutte_kn(4);
  // x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
  CHECK(K4.by_x.size() == 4);
  CHECK(K4.by_x[0] == Polynomial{0, 2, 3, 1});
  CHECK(K4.by_x[1] == Polynomial{2, 4});
  CHECK(K4.by_x[2] == Polynomial{3});
  CHECK(K4.by_x[3] == Polynomial{1});
  CHECK(K4(r(3, 2), 2) == r(393, 8));
  CHECK(K4(1, 2) == 38);
  for (int n = 1; n <= 8; ++n) {
    const auto T = tutte_kn(n);
    CHECK(T.is_integral());
    Polynomial at1;
    for (const auto& p : T.by_x) at1 += p;
    CHECK(at1 == mallows_riordan(n));
    // every edge subset once
    CHECK(T(2, 2) == Rational(Integer(1) << (n * (n - 1) / 2)));
  }
  for (int n = 0; n <= 6; ++n) CHECK(tutte_complete(n).is_integral());
}

TEST_CASE("caches are safe under concurrent first use") {
  std::vector<std::thread> pool;
  std::vector<Polynomial> got(4);
  for (int i = 0; i < 4; ++i) pool.emplace_back([&, i] { got[i] = j_hat(14 + (i % 2)); });
  for (auto& t : pool) t.join();
  CHECK(got[0] == got[2]);
  CHECK(got[1] == got[3]);
  CHECK(got[0] == routes::jh_recurrence(15)[14]);
}

TEST_CASE("negative-value scan returns only genuine witnesses") {
  std::vector<Rational> grid;
  for (int k = 11; k <= 30; ++k) grid.push_back(r(-k, 10));
  for (const auto& w : scan_negative_j(10, grid)) {
    CHECK(w.theta < -1);
    CHECK(mallows_riordan(w.n)(w.theta) == w.value);
    CHECK(w.value < 0);
  }
}
