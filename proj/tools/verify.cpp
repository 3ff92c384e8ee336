#include "verify.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>

#include "arpl/asymptotics.hpp"
#include "arpl/mr_polynomials.hpp"
#include "arpl/persistence.hpp"
#include "reference.hpp"

namespace arpl::cli {

namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

Rational r(long p, long q = 1) { return make_rational(p, q); }

std::string at(int n, const Rational& theta) { return "n=" + std::to_string(n) + " theta=" + to_string(theta); }

// Seidel boustrophedon, independent of any series code.
std::vector<Integer> zigzag_boustrophedon(int nmax) {
  std::vector<Integer> out{1}, row{1};
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Integer> next(static_cast<std::size_t>(n + 1));
    next[0] = 0;
    for (int k = 1; k <= n; ++k) next[k] = next[k - 1] + row[static_cast<std::size_t>(n - k)];
    out.push_back(next[static_cast<std::size_t>(n)]);
    row = std::move(next);
  }
  return out;
}

// Connected labeled graphs on n vertices, by removing the component of vertex 1.
std::vector<Integer> connected_graphs(int nmax) {
  auto all = [](int n) -> Integer { return Integer(1) << static_cast<unsigned>(n * (n - 1) / 2); };
  std::vector<Integer> c(static_cast<std::size_t>(nmax + 1), 0);
  for (int n = 1; n <= nmax; ++n) {
    Integer v = all(n);
    for (int k = 1; k < n; ++k) v -= binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1)) * c[k] * all(n - k);
    c[static_cast<std::size_t>(n)] = v;
  }
  return c;
}

std::string printed_tables(int) {
  const auto J = reference::j_table();
  const auto Jt = reference::j_tilde_table();
  const auto Jh = reference::j_hat_table();
  for (int n = 1; n <= 6; ++n) expect(mallows_riordan(n) == J[n], "J_" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) expect(j_tilde(n) == Jt[n], "J~_" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) expect(j_hat(n) == Jh[n], "J^_" + std::to_string(n));
  return "J_1..J_6, J~_2..J~_6, J^_2..J^_6";
}

std::string j_routes(int nmax) {
  const int N = std::max(nmax, 10);
  const auto a = routes::j_recurrence(N);
  expect(routes::j_log_e(N) == a, "log E route");
  expect(routes::j_ratio(N) == a, "ratio route");
  expect(routes::j_linear(N) == a, "linear recurrence");
  return "recurrence = log E = ratio = linear, n<=" + std::to_string(N);
}

std::string gessel(int) {
  expect(routes::j_gessel(10) == routes::j_recurrence(10), "Gessel ratio");
  return "order 10";
}

std::string j_tilde_routes(int nmax) {
  const int N = std::max(nmax, 10);
  const auto a = routes::jt_inverse(N);
  expect(routes::jt_recurrence(N) == a, "recurrence");
  expect(routes::jt_alternate(N) == a, "alternate recurrence");
  expect(routes::jt_exp(N) == a, "exp route");
  return "inverse = recurrence = alternate = exp, n<=" + std::to_string(N);
}

std::string j_hat_routes(int nmax) {
  const int N = std::max(nmax, 10);
  const auto a = routes::jh_sum(N);
  expect(routes::jh_recurrence(N) == a, "recurrence");
  expect(routes::jh_series(N) == a, "series");
  return "sum = recurrence = series, n<=" + std::to_string(N);
}

std::string specializations(int) {
  const auto A = zigzag_boustrophedon(15);
  for (int n = 0; n <= 15; ++n) expect(mallows_riordan(n + 1)(0) == Rational(factorial(static_cast<unsigned>(n))), "J_{n+1}(0)=n!");
  for (int n = 1; n <= 12; ++n) {
    Integer v = 1;
    if (n >= 2) mpz_pow_ui(v.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned>(n - 2));
    expect(mallows_riordan(n)(1) == Rational(v), "J_n(1)=n^(n-2) at n=" + std::to_string(n));
  }
  for (int n = 0; n <= 12; ++n) {
    expect(mallows_riordan(n + 1)(-1) == Rational(A[n]), "J_{n+1}(-1)=A_n");
    expect(j_tilde(n + 1)(-1) == Rational(A[n]), "J~_{n+1}(-1)=A_n");
  }
  for (int n = 1; n <= 10; ++n) {
    Integer v = 1;
    mpz_pow_ui(v.get_mpz_t(), Integer(n - 1).get_mpz_t(), static_cast<unsigned>(n - 1));
    const Rational lhs = (n % 2 == 1 ? 1 : -1) * j_tilde(n + 1)(1);
    expect(lhs == Rational(v), "(-1)^(n-1) J~_{n+1}(1)=(n-1)^(n-1) at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 12; ++n)
    expect(j_hat(n + 1)(0) == Rational((Integer(1) << static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n))),
           "J^_{n+1}(0)=2^(n-1) n!");
  return "theta in {0, 1, -1}";
}

std::string structure(int nmax) {
  const int N = std::max(nmax, 10);
  for (int n = 1; n <= N; ++n) {
    const auto deg = n * (n - 1) / 2;
    const auto& J = mallows_riordan(n + 1);
    expect(J.degree() == deg && J.leading() == 1 && J.is_integral(), "J shape at n=" + std::to_string(n));
    for (int k = 0; k <= deg; ++k) expect(J[k] > 0, "J coefficient sign");
    const auto& Jt = j_tilde(n + 1);
    expect(Jt.degree() == deg && Jt.valuation() == n - 1 && Jt.is_integral(), "J~ shape at n=" + std::to_string(n));
    const int s = n % 2 == 1 ? 1 : -1;
    for (int k = n - 1; k <= deg; ++k) expect(sign(Jt[k]) == s, "J~ coefficient sign");
    const auto& Jh = j_hat(n + 1);
    expect(Jh.degree() == deg && Jh.is_integral(), "J^ shape at n=" + std::to_string(n));
    expect(Jh[0] == Rational((Integer(1) << static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n))), "J^ constant");
    for (int k = 1; k <= deg; ++k) expect(Jh[k] < 0, "J^ coefficient sign");
  }
  return "degree, valuation and sign patterns, n<=" + std::to_string(N);
}

std::string zigzag_numbers(int) {
  const auto A = zigzag_boustrophedon(15);
  for (int n = 0; n <= 15; ++n) expect(zigzag(n) == A[n], "A_" + std::to_string(n));
  for (int n = 1; n <= 12; ++n) {
    Integer s = 0;
    for (int k = 0; k <= n; ++k)
      s += (k % 2 ? -1 : 1) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * A[k] * A[n - k];
    expect(s == 0, "alternating convolution at n=" + std::to_string(n));
  }
  return "series = boustrophedon, n<=15; alternating convolution n<=12";
}

std::string oracle_vs_closed_form(int nmax) {
  const int N = std::max(nmax, 10);
  const std::vector<Rational> thetas{r(-3), r(-2), r(-1), r(-1, 2), r(0), r(1, 3), r(1, 2), r(2), r(5, 2), r(3)};
  for (const auto& t : thetas) {
    const auto seq = oracle_sequence(t, 1, 1, N);
    for (int n = 0; n <= N; ++n) {
      PersistenceQuery q{n, t, 1, 1};
      expect(region_of(q) != RegionTag::FibonacciWindow, "unexpected window at " + at(n, t));
      expect(persistence_closed_form(q) == seq[n], "oracle != closed form at " + at(n, t));
    }
  }
  return std::to_string(thetas.size()) + " drifts, n<=" + std::to_string(N);
}

std::string fibonacci_window(int) {
  auto low = [](const Rational& t) -> Rational { return t + r(11, 6) - 1 / (2 * t * t) + 1 / (6 * t * t * t); };
  auto high = [](const Rational& t) -> Rational { return -1 / t + r(19, 6) + t * t / 2 - t * t * t / 6; };
  expect(region_of({3, r(4, 5), 1, 1}) == RegionTag::FibonacciWindow, "4/5 not in window");
  expect(region_of({3, r(6, 5), 1, 1}) == RegionTag::FibonacciWindow, "6/5 not in window");
  expect(persistence_oracle({3, r(4, 5), 1, 1}) * 8 == low(r(4, 5)), "n=3 theta=4/5");
  expect(persistence_oracle({3, r(6, 5), 1, 1}) * 8 == high(r(6, 5)), "n=3 theta=6/5");
  expect(low(1) == r(5, 2) && high(1) == r(5, 2), "window formulas at theta=1");
  expect(persistence_oracle({3, 1, 1, 1}) * 8 == r(5, 2), "oracle at theta=1");
  return "n=3 at theta=4/5, 6/5 and 1";
}

std::string sparre_andersen(int nmax) {
  const auto seq = oracle_sequence(1, 1, 1, nmax);
  for (int n = 0; n <= nmax; ++n)
    expect(seq[n] == Rational(binomial(2 * static_cast<unsigned>(n), static_cast<unsigned>(n))) / pow(Rational(4), n),
           "theta=1 n=" + std::to_string(n));
  return "binom(2n,n)/4^n, n<=" + std::to_string(nmax);
}

std::string duality(int nmax, DualitySign s, const std::vector<Rational>& thetas) {
  for (const auto& t : thetas)
    for (int n = 1; n <= nmax; ++n) expect(duality_residual(n, t, s) == 0, "residual at " + at(n, t));
  return "residual 0, n<=" + std::to_string(nmax);
}

std::string boundary(int) {
  const auto A = zigzag_boustrophedon(12);
  for (int n = 2; n <= 12; ++n) {
    const auto bd = boundary_derivatives(n);
    expect(bd.left_p1 == bd.right_p1, "first derivative jump at n=" + std::to_string(n));
    const Rational jump = Rational(A[n - 2]) /
                          (Rational(Integer(1) << static_cast<unsigned>(n)) * Rational(factorial(static_cast<unsigned>(n - 2))));
    expect(bd.left_p2 - bd.right_p2 == jump, "second derivative jump at n=" + std::to_string(n));
  }
  return "C^1 and second-derivative jump, 2<=n<=12";
}

std::string derivative_at_minus_one(int) {
  for (int n = 0; n <= 12; ++n) {
    const auto dJ = mallows_riordan(n + 1).derivative()(-1);
    const auto dJt = j_tilde(n + 1).derivative()(-1);
    if (n <= 1)
      expect(dJ == 0, "J'_{n+1}(-1)=0 at n=" + std::to_string(n));
    else
      expect(dJ == r(n, 2) * mallows_riordan(n + 1)(-1), "J'_{n+1}(-1)=(n/2)J_{n+1}(-1) at n=" + std::to_string(n));
    expect(dJt == -dJ, "J~'_{n+1}(-1)=-J'_{n+1}(-1) at n=" + std::to_string(n));
  }
  return "n<=12";
}

std::string nested(int) {
  const Polynomial tm1{-1, 1};
  for (int n = 1; n <= 10; ++n)
    expect(nested_volume(n) == tm1.pow(static_cast<unsigned>(n)) * mallows_riordan(n + 1) / Rational(factorial(static_cast<unsigned>(n))),
           "n=" + std::to_string(n));
  return "coefficientwise, n<=10";
}

std::string tutte(int) {
  const auto conn = connected_graphs(8);
  for (int n = 1; n <= 8; ++n) {
    const auto T = tutte_kn(n);
    expect(T.is_integral(), "integrality at n=" + std::to_string(n));
    Polynomial at1;
    for (std::size_t k = 0; k < T.by_x.size(); ++k) at1 += T.by_x[k];
    expect(at1 == mallows_riordan(n), "T_{K_n}(1,theta)=J_n at n=" + std::to_string(n));
    expect(T(1, 2) == Rational(conn[n]), "connected graph count at n=" + std::to_string(n));
    expect(T(2, 2) == Rational(Integer(1) << static_cast<unsigned>(n * (n - 1) / 2)), "T(2,2)=2^|E| at n=" + std::to_string(n));
  }
  expect(tutte_kn(4)(r(3, 2), 2) == r(393, 8), "T_{K_4}(3/2,2)");
  return "T(1,theta)=J_n, T(1,2), T(2,2), n<=8";
}

std::string hitting(int) {
  for (const auto& t : {r(2), r(3)}) {
    const auto seq = oracle_sequence(t, 1, 1, 10);
    Rational total = 0;
    for (int n = 1; n <= 10; ++n) {
      expect(hitting_pmf_formula(n, t) == seq[n - 1] - seq[n], "formula at " + at(n, t));
      total += seq[n - 1] - seq[n];
      expect(total + seq[n] == 1, "telescoping at " + at(n, t));
    }
  }
  return "theta in {2, 3}, n<=10";
}

std::string asymmetric(int) {
  for (auto [a, b] : {std::pair{2L, 1L}, std::pair{1L, 3L}})
    for (const auto& t : {r(-2), r(-1), r(1, 4)}) {
      const auto seq = oracle_sequence(t, a, b, 8);
      for (int n = 0; n <= 8; ++n) {
        PersistenceQuery q{n, t, a, b};
        expect(region_of(q) != RegionTag::FibonacciWindow, "window at " + at(n, t));
        expect(persistence_closed_form(q) == seq[n], "a=" + std::to_string(a) + " b=" + std::to_string(b) + " " + at(n, t));
      }
    }
  return "(a,b) in {(2,1),(1,3)}, n<=8";
}

std::string monotonicity(int nmax) {
  const int N = std::min(nmax, 8);
  std::vector<Rational> prev;
  for (Rational t = -3; t <= 3; t += r(1, 4)) {
    const auto seq = oracle_sequence(t, 1, 1, N);
    for (int n = 0; n < N; ++n) expect(seq[n + 1] <= seq[n], "p_{n+1} <= p_n at " + at(n, t));
    if (!prev.empty())
      for (int n = 0; n <= N; ++n) expect(prev[n] <= seq[n], "nondecreasing in theta at " + at(n, t));
    for (int n = 1; n <= N; ++n)
      for (int m = 1; n + m <= N; ++m) {
        if (t > 0) expect(seq[n + m] >= seq[n] * seq[m], "superadditivity at " + at(n, t));
        if (t < 0) expect(seq[n + m] <= seq[n] * seq[m], "subadditivity at " + at(n, t));
      }
    prev = seq;
  }
  return "theta grid step 1/4 on [-3,3], n<=" + std::to_string(N);
}

std::vector<Rational> p_values(const Rational& t, int N) {
  std::vector<Rational> out;
  for (int n = 0; n <= N; ++n) out.push_back(persistence({n, t, 1, 1}));
  return out;
}

std::string log_convexity(int) {
  for (const auto& t : {r(0), r(1, 4), r(1, 2)}) {
    const auto p = p_values(t, 21);
    std::vector<Rational> law;
    for (int n = 0; n <= 20; ++n) law.push_back(p[n] - p[n + 1]);
    expect(log_convexity_check(law).holds, "T~ law at theta=" + to_string(t));
  }
  {
    const auto p = oracle_sequence(1, 1, 1, 21);
    std::vector<Rational> law;
    for (int n = 0; n <= 20; ++n) law.push_back(p[n] - p[n + 1]);
    expect(log_convexity_check(law).holds, "T~ law at theta=1");
  }
  const auto p = p_values(-2, 20);
  const auto v = log_convexity_check(std::vector<Rational>(p.begin() + 1, p.end()));
  expect(!v.holds, "no violation at theta=-2");
  return "holds for theta in {0,1/4,1/2,1}; theta=-2 fails at index " + std::to_string(*v.first_violation + 1);
}

std::string coefficient_stability(int) {
  for (int k = 0; k <= 4; ++k) {
    Rational first;
    for (int n = k + 1; n <= 10; ++n) {
      const Rational c = j_hat(n + 1)[k] /
                         Rational((Integer(1) << static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n)));
      if (n == k + 1) first = c;
      expect(c == first, "coefficient " + std::to_string(k) + " at n=" + std::to_string(n));
    }
  }
  return "first 5 coefficients in 1/theta, n<=10";
}

std::string ell_expansion(int) {
  expect(ell_expansion_coefficients(9) == reference::ell_coefficients(), "a_0..a_9");
  return "a_0..a_9";
}

std::string harmonic(int) {
  Rational s = 0, h = 0;
  for (int n = 1; n <= 30; ++n) {
    s += mallows_riordan(n)(0) / Rational(factorial(static_cast<unsigned>(n)));
    h += r(1, n);
    expect(s == h, "partial sum at N=" + std::to_string(n));
  }
  return "sum_{n<=N} J_n(0)/n! = H_N, N<=30";
}

std::string oracle_mass(int nmax) {
  for (const auto& t : {r(-3, 2), r(4, 5), r(3, 2), r(3)}) {
    Rational prev = 1;
    for (int n = 1; n <= nmax; ++n) {
      const auto m = survival_density({n, t, 1, 1}).mass();
      expect(m >= 0 && m <= prev, "density mass at " + at(n, t));
      prev = m;
    }
  }
  return "masses in [0,1] and nonincreasing";
}

}  // namespace

std::vector<CheckResult> run_verify(int nmax, std::ostream* log, bool stop_on_failure) {
  if (nmax < 2) throw std::invalid_argument("verify: nmax must be >= 2");
  using Fn = std::function<std::string(int)>;
  const std::vector<std::pair<std::string, Fn>> checks{
      {"printed_tables", printed_tables},
      {"j_routes", j_routes},
      {"gessel_identity", gessel},
      {"j_tilde_routes", j_tilde_routes},
      {"j_hat_routes", j_hat_routes},
      {"specializations", specializations},
      {"structure", structure},
      {"zigzag", zigzag_numbers},
      {"oracle_vs_closed_form", oracle_vs_closed_form},
      {"fibonacci_window", fibonacci_window},
      {"sparre_andersen", sparre_andersen},
      {"duality_alternating",
       [](int n) { return duality(n, DualitySign::Alternating, {r(-3), r(-3, 2), r(-1)}); }},
      {"duality_plain", [](int n) { return duality(n, DualitySign::Plain, {r(3, 2), r(2), r(3)}); }},
      {"boundary_derivatives", boundary},
      {"derivative_at_minus_one", derivative_at_minus_one},
      {"nested_volume", nested},
      {"tutte_complete_graphs", tutte},
      {"hitting_law", hitting},
      {"asymmetric_uniform", asymmetric},
      {"monotonicity", monotonicity},
      {"log_convexity", log_convexity},
      {"coefficient_stability", coefficient_stability},
      {"ell_expansion", ell_expansion},
      {"harmonic_partial_sums", harmonic},
      {"oracle_mass", oracle_mass},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    CheckResult res;
    res.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      res.detail = fn(nmax);
      res.passed = true;
    } catch (const std::exception& e) {
      res.detail = e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (log) {
      if (res.passed)
        *log << "EXACT PASS  " << name << "  (" << res.detail << ")\n";
      else
        *log << "FAIL        " << name << ": " << res.detail << '\n';
      log->flush();
    }
    out.push_back(res);
    if (!res.passed && stop_on_failure) break;
  }
  return out;
}

}  // namespace arpl::cli
