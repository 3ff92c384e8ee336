#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "arpl/asymptotics.hpp"
#include "arpl/montecarlo.hpp"
#include "arpl/mr_polynomials.hpp"
#include "arpl/persistence.hpp"
#include "arpl/serialize.hpp"
#include "figure.hpp"
#include "table.hpp"
#include "verify.hpp"

namespace arpl::cli {

namespace {

struct Io {
  std::string format = "csv";
  std::string out;
  Format fmt() const { return format == "json" ? Format::Json : Format::Csv; }
  std::string ext() const { return format == "json" ? ".json" : ".csv"; }
};

void add_io(CLI::App* sub, Io& io) {
  sub->add_option("--format", io.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", io.out, std::string("output file (default: $") + kOutDirEnv + "/<command>.<ext>, else stdout)");
}

// Resolved output path, empty for stdout.
std::string target_path(const Io& io, const std::string& command) {
  if (!io.out.empty()) return io.out;
  if (const char* dir = std::getenv(kOutDirEnv); dir && *dir)
    return (std::filesystem::path(dir) / (command + io.ext())).string();
  return {};
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << text;
}

void emit(const Table& t, const Io& io, const std::string& command, std::ostream& out) {
  std::ostringstream s;
  t.write(s, io.fmt());
  write_text(target_path(io, command), s.str(), out);
}

std::vector<Rational> parse_thetas(const std::vector<std::string>& in) {
  std::vector<Rational> out;
  for (const auto& s : in) out.push_back(parse_rational(s));
  return out;
}

Json poly_json(const Polynomial& p) { return polynomial_to_json(p); }

std::string poly_csv(const Polynomial& p) {
  std::string s;
  for (int k = 0; k <= p.degree(); ++k) s += (k ? " " : "") + to_string(p[k]);
  return s;
}

// ------------------------------------------------------------------- poly

struct PolyArgs {
  Io io;
  std::string family = "J";
  int nmax = 6;
  std::optional<int> n;
  bool verify = false;
  bool scan_negative = false;
  std::vector<std::string> thetas;
};

int cmd_poly(const PolyArgs& a, std::ostream& out) {
  Table t;
  if (a.scan_negative) {
    std::vector<Rational> grid = parse_thetas(a.thetas);
    if (grid.empty())
      for (int k = 105; k <= 400; k += 5) grid.push_back(make_rational(-k, 100));
    t.name = "scan_negative_j";
    t.columns = {"n", "theta", "value"};
    t.meta["note"] = "exploratory search for J_n(theta) < 0 with theta < -1";
    t.meta["nmax"] = a.nmax;
    for (const auto& w : scan_negative_j(a.nmax, grid)) t.add({w.n, to_string(w.theta), to_string(w.value)});
    emit(t, a.io, "poly", out);
    return 0;
  }
  const Verify v = a.verify ? Verify::On : Verify::Off;
  const bool json = a.io.fmt() == Format::Json;
  t.name = a.family;
  t.columns = {"family", "n", "coefficients"};
  const int lo = a.n ? *a.n : (a.family == "zigzag" ? 0 : 1);
  const int hi = a.n ? *a.n : a.nmax;
  for (int n = lo; n <= hi; ++n) {
    Json coeffs;
    if (a.family == "zigzag") {
      coeffs = to_string(zigzag(n));
    } else if (a.family == "tutte") {
      const auto T = tutte_kn(n);
      Json rows = Json::array();
      for (const auto& p : T.by_x) rows.push_back(poly_json(p));
      coeffs = json ? rows : Json(rows.dump());
    } else {
      Polynomial p;
      if (a.family == "J")
        p = mallows_riordan(n, v);
      else if (a.family == "jtilde")
        p = j_tilde(n, v);
      else if (a.family == "jhat")
        p = j_hat(n, v);
      else
        p = c_poly(n);
      coeffs = json ? poly_json(p) : Json(poly_csv(p));
    }
    t.add({a.family, n, coeffs});
  }
  if (a.verify) t.meta["verified_routes"] = true;
  emit(t, a.io, "poly", out);
  return 0;
}

// ---------------------------------------------------------------- persist

struct PersistArgs {
  Io io;
  std::vector<int> ns;
  int nmax = 10;
  std::vector<std::string> thetas;
  std::string a = "1", b = "1";
  std::string method = "auto";
  bool hitting = false;
};

int cmd_persist(const PersistArgs& args, std::ostream& out) {
  const Rational a = parse_rational(args.a), b = parse_rational(args.b);
  std::vector<int> ns = args.ns;
  if (ns.empty())
    for (int n = 0; n <= args.nmax; ++n) ns.push_back(n);
  Table t;
  t.name = "persist";
  t.columns = {"n", "theta", "a", "b", "p_exact", "p_float", "region_tag"};
  if (args.hitting) t.columns.push_back("hit_exact");
  for (const auto& theta : parse_thetas(args.thetas))
    for (int n : ns) {
      PersistenceQuery q{n, theta, a, b};
      const RegionTag tag = region_of(q);
      Rational p;
      if (args.method == "oracle")
        p = persistence_oracle(q);
      else if (args.method == "closed")
        p = persistence_closed_form(q);
      else
        p = persistence(q);
      std::vector<Json> row{n, to_string(theta), to_string(a), to_string(b), to_string(p), to_double(p), region_name(tag)};
      if (args.hitting) row.emplace_back(n >= 1 ? Json(to_string(hitting_pmf(q))) : Json(nullptr));
      t.add(std::move(row));
    }
  emit(t, args.io, "persist", out);
  return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  Io io;
  int nmax = 8;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::ostringstream log;
  const bool text = a.io.format == "csv" && a.io.out.empty() && !std::getenv(kOutDirEnv);
  const auto results = run_verify(a.nmax, text ? &out : &log);
  const CheckResult* first_fail = nullptr;
  for (const auto& r : results)
    if (!r.passed && !first_fail) first_fail = &r;
  if (!text) {
    Table t;
    t.name = "verify";
    t.columns = {"check", "status", "detail"};
    t.meta["nmax"] = a.nmax;
    for (const auto& r : results) t.add({r.name, r.passed ? "EXACT PASS" : "FAIL", r.detail});
    emit(t, a.io, "verify", out);
  }
  if (first_fail) {
    err << "verify: first failing identity: " << first_fail->name << " (" << first_fail->detail << ")\n";
    return 1;
  }
  if (text) out << results.size() << " identity families, all EXACT PASS\n";
  return 0;
}

// --------------------------------------------------------------- simulate

struct SimulateArgs {
  Io io;
  std::vector<std::string> thetas;
  std::string law = "uniform";
  std::string a = "1", b = "1";
  double c = 0.5;
  std::optional<int> n;
  int nmax = 6;
  std::int64_t trials = 100000;
  std::uint64_t seed = kDefaultSeed;
  bool identity = false;
  bool serial = false;
};

InnovationLaw make_law(const SimulateArgs& s) {
  if (s.law == "gaussian") return InnovationLaw::gaussian();
  if (s.law == "biexp") return InnovationLaw::biexponential();
  if (s.law == "atomic") return InnovationLaw::atomic(s.c);
  return InnovationLaw::uniform(to_double(parse_rational(s.a)), to_double(parse_rational(s.b)));
}

// Exact or closed-form reference for p_n when one is known.
std::optional<double> reference_p(const SimulateArgs& s, const Rational& theta, int n) {
  const double th = to_double(theta);
  const InnovationLaw law = make_law(s);
  if (law.kind == InnovationLaw::Kind::Atomic) return std::pow(1.0 - s.c, n);
  if (law.symmetric && theta == 1) return to_double(Rational(binomial(2u * unsigned(n), unsigned(n))) / pow(Rational(4), n));
  if (law.kind == InnovationLaw::Kind::Uniform) {
    if (n > 12) return std::nullopt;
    return to_double(persistence({n, theta, parse_rational(s.a), parse_rational(s.b)}));
  }
  if (law.kind == InnovationLaw::Kind::Biexponential) {
    if (th <= 0) return biexp_persistence_nonpositive(th, n);
    return qseries_biexp_coefficients(th, n)[static_cast<std::size_t>(n)];
  }
  return std::nullopt;
}

int cmd_simulate(const SimulateArgs& s, std::ostream& out) {
  const InnovationLaw law = make_law(s);
  const Exec exec = s.serial ? Exec::Serial : Exec::Parallel;
  Table t;
  t.meta["seed"] = s.seed;
  t.meta["trials"] = s.trials;
  t.meta["law"] = law.name();
  if (s.identity) {
    t.name = "identity";
    t.columns = {"theta", "n", "sum", "target", "residual", "std_error", "flagged"};
    for (const auto& theta : parse_thetas(s.thetas)) {
      const auto rep = mc_identity_check(to_double(theta), law, s.nmax, s.trials, s.seed, exec);
      for (const auto& r : rep.rows)
        t.add({to_double(theta), r.n, r.sum, r.target, r.residual, r.std_error, r.flagged});
    }
    emit(t, s.io, "simulate", out);
    return 0;
  }
  t.name = "simulate";
  t.columns = {"theta", "n", "successes", "estimate", "ci_low", "ci_high", "exact", "z_score"};
  for (const auto& theta : parse_thetas(s.thetas)) {
    const int top = s.n ? *s.n : s.nmax;
    const auto prof = estimate_persistence_profile(to_double(theta), law, top, s.trials, s.seed, exec);
    const int first = s.n ? *s.n : 0;
    for (int n = first; n <= top; ++n) {
      const auto& e = prof[static_cast<std::size_t>(n)];
      Json exact = nullptr, z = nullptr;
      if (auto ref = reference_p(s, theta, n)) {
        exact = *ref;
        const double se = std::sqrt(*ref * (1 - *ref) / static_cast<double>(s.trials));
        if (se > 0) z = (e.point - *ref) / se;
      }
      t.add({to_double(theta), n, e.successes, e.point, e.ci_low, e.ci_high, exact, z});
    }
  }
  emit(t, s.io, "simulate", out);
  return 0;
}

// ------------------------------------------------------------------ rates

struct RatesArgs {
  Io io;
  std::vector<std::string> thetas;
};

int cmd_rates(const RatesArgs& a, std::ostream& out) {
  Table t;
  t.name = "rates";
  t.columns = {"theta", "z_root", "lambda_or_mu", "ell", "nu", "kappa_estimate", "c_estimate", "c_drift",
               "root_residual", "inequalities_hold"};
  auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
  for (const auto& s : a.thetas) {
    const double theta = to_double(parse_rational(s));
    const auto rb = decay_rate(theta);
    const double base = (theta < -1 || theta > 1) ? 1.0 / theta : theta;
    const double residual = std::fabs(deformed_exp(base, -rb.z_root));
    t.add({theta, rb.z_root, rb.lambda, opt(rb.ell), opt(rb.nu), opt(rb.kappa_estimate), opt(rb.c_estimate),
           opt(rb.c_drift), residual, rb.inequalities_hold});
  }
  emit(t, a.io, "rates", out);
  return 0;
}

// ----------------------------------------------------------------- volume

struct VolumeArgs {
  Io io;
  std::string polytope = "zigzag";
  int n = 3;
  double q = 0.5, t = 1.0;
  std::int64_t trials = 1000000;
  std::uint64_t seed = kDefaultSeed;
  bool serial = false;
};

int cmd_volume(const VolumeArgs& a, std::ostream& out) {
  PolytopeSpec spec = a.polytope == "cayley"        ? PolytopeSpec::cayley(a.n)
                      : a.polytope == "tutte_limit" ? PolytopeSpec::tutte_limit(a.n, a.t)
                      : a.polytope == "tutte_q"     ? PolytopeSpec::tutte_q(a.n, a.q, a.t)
                                                    : PolytopeSpec::zigzag(a.n);
  const auto v = polytope_volume_mc(spec, a.trials, a.seed, a.serial ? Exec::Serial : Exec::Parallel);
  Table t;
  t.name = "volume";
  t.meta["seed"] = a.seed;
  t.meta["trials"] = a.trials;
  t.columns = {"polytope", "n", "q", "t", "hits", "box_volume", "estimate", "ci_low", "ci_high", "exact", "exact_float", "z_score"};
  t.add({spec.name(), spec.n, spec.q, spec.t, v.hits.successes, v.box_volume, v.volume, v.ci_low, v.ci_high,
         to_string(v.exact), to_double(v.exact), v.z_score});
  emit(t, a.io, "volume", out);
  return 0;
}

// ----------------------------------------------------------------- figure

struct FigureArgs {
  Io io;
  std::vector<int> ns{4, 5};
  std::string grid = "1/100", lo = "-5", hi = "5";
  bool serial = false;
};

int cmd_figure(const FigureArgs& a, std::ostream& out) {
  FigureOptions opt;
  opt.ns = a.ns;
  opt.step = parse_rational(a.grid);
  opt.lo = parse_rational(a.lo);
  opt.hi = parse_rational(a.hi);
  const auto data = figure_data(opt, a.serial ? Exec::Serial : Exec::Parallel);
  const Table grid = figure_table(data), markers = figure_markers(a.ns);
  const std::string path = target_path(a.io, "figure");
  if (a.io.fmt() == Format::Json) {
    Json doc{{"figure", grid.to_json()}, {"markers", markers.to_json()}};
    write_text(path, doc.dump(2) + "\n", out);
    return 0;
  }
  std::ostringstream s;
  grid.write_csv(s);
  write_text(path, s.str(), out);
  if (!path.empty()) {
    auto p = std::filesystem::path(path);
    const auto mpath = (p.parent_path() / (p.stem().string() + "_markers" + p.extension().string())).string();
    std::ostringstream m;
    markers.write_csv(m);
    write_text(mpath, m.str(), out);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte Carlo persistence probabilities of AR(1) processes"};
  app.require_subcommand(1);

  PolyArgs poly;
  auto* p = app.add_subcommand("poly", "coefficient tables of J, J~, J^, C, Tutte(K_n) and zigzag numbers");
  add_io(p, poly.io);
  p->add_option("--family", poly.family)->check(CLI::IsMember({"J", "jtilde", "jhat", "c", "tutte", "zigzag"}));
  p->add_option("--nmax", poly.nmax)->check(CLI::Range(0, 200));
  p->add_option("--n", poly.n, "single index instead of the range up to --nmax");
  p->add_flag("--verify", poly.verify, "recompute by every route and compare");
  p->add_flag("--scan-negative", poly.scan_negative, "search for J_n(theta) < 0 on the --theta grid");
  p->add_option("--theta", poly.thetas, "grid for --scan-negative");

  PersistArgs per;
  auto* ps = app.add_subcommand("persist", "exact p_n(theta) with region tags");
  add_io(ps, per.io);
  ps->add_option("--n", per.ns, "horizons (default 0..nmax)");
  ps->add_option("--nmax", per.nmax)->check(CLI::NonNegativeNumber);
  ps->add_option("--theta", per.thetas, "drifts as num/den or decimals")->required();
  ps->add_option("--a", per.a, "left half-width of the uniform law");
  ps->add_option("--b", per.b, "right half-width of the uniform law");
  ps->add_option("--method", per.method)->check(CLI::IsMember({"auto", "closed", "oracle"}));
  ps->add_flag("--hitting", per.hitting, "also emit P[T = n]");

  VerifyArgs ver;
  auto* vs = app.add_subcommand("verify", "run the exact identity suite");
  add_io(vs, ver.io);
  vs->add_option("--nmax", ver.nmax)->check(CLI::Range(2, 30));

  SimulateArgs sim;
  auto* ss = app.add_subcommand("simulate", "Monte Carlo persistence and duality sums");
  add_io(ss, sim.io);
  ss->add_option("--theta", sim.thetas)->required();
  ss->add_option("--law", sim.law)->check(CLI::IsMember({"uniform", "gaussian", "biexp", "atomic"}));
  ss->add_option("--a", sim.a);
  ss->add_option("--b", sim.b);
  ss->add_option("--c", sim.c, "atomic law: mass off zero");
  ss->add_option("--n", sim.n, "single horizon");
  ss->add_option("--nmax", sim.nmax)->check(CLI::NonNegativeNumber);
  ss->add_option("--trials", sim.trials)->check(CLI::PositiveNumber);
  ss->add_option("--seed", sim.seed);
  ss->add_flag("--identity", sim.identity, "duality sums with propagated standard errors");
  ss->add_flag("--serial", sim.serial, "use the serial reference kernel");

  RatesArgs rat;
  auto* rs = app.add_subcommand("rates", "decay rates, ell and nu");
  add_io(rs, rat.io);
  rs->add_option("--theta", rat.thetas)->required();

  VolumeArgs vol;
  auto* vo = app.add_subcommand("volume", "hit-or-miss polytope volumes");
  add_io(vo, vol.io);
  vo->add_option("--polytope", vol.polytope)->check(CLI::IsMember({"zigzag", "cayley", "tutte_limit", "tutte_q"}));
  vo->add_option("--n", vol.n)->check(CLI::Range(1, 12));
  vo->add_option("--q", vol.q);
  vo->add_option("--t", vol.t);
  vo->add_option("--trials", vol.trials)->check(CLI::PositiveNumber);
  vo->add_option("--seed", vol.seed);
  vo->add_flag("--serial", vol.serial);

  FigureArgs fig;
  auto* fs = app.add_subcommand("figure", "p_n(theta) grid with finite-difference derivatives");
  add_io(fs, fig.io);
  fs->add_option("--n", fig.ns)->check(CLI::Range(1, 12));
  fs->add_option("--grid", fig.grid, "theta step");
  fs->add_option("--lo", fig.lo);
  fs->add_option("--hi", fig.hi);
  fs->add_flag("--serial", fig.serial);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*p) return cmd_poly(poly, out);
    if (*ps) return cmd_persist(per, out);
    if (*vs) return cmd_verify(ver, out, err);
    if (*ss) return cmd_simulate(sim, out);
    if (*rs) return cmd_rates(rat, out);
    if (*vo) return cmd_volume(vol, out);
    if (*fs) return cmd_figure(fig, out);
  } catch (const NoClosedForm& e) {
    err << "error: " << e.what() << " (window approx. [" << e.lo << ", " << e.hi << "])\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"arpl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace arpl::cli
