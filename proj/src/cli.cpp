#include "recip/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "recip/dedekind.hpp"
#include "recip/lattice.hpp"
#include "recip/output.hpp"
#include "recip/zeta.hpp"

namespace recip::cli {

namespace {

struct Flags {
  std::string nu;
  std::string f;
  std::string q;
  std::optional<long> k;
  std::optional<long> l;
  std::optional<long> N;
  std::optional<double> tol;
  std::string method;
  std::string format;
  bool numeric = false;
  std::string variant = "full";
  std::string pairing = "symmetric";
  std::optional<long> max;
  std::optional<long> probe;
};

class FlagError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename F>
auto for_flag(const char* flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FlagError&) {
    throw;
  } catch (const std::exception& e) {
    throw FlagError(std::string(flag) + ": " + e.what());
  }
}

void require(bool present, const char* flag, const std::string& command) {
  if (!present) throw FlagError(std::string(flag) + ": required by '" + command + "'");
}

NuVector nu_of(const Flags& fl, const std::string& cmd) {
  require(!fl.nu.empty(), "--nu", cmd);
  return for_flag("--nu", [&] { return parse_nu_vector(fl.nu); });
}

std::vector<PeriodicFn> f_of(const Flags& fl, const std::string& cmd) {
  require(!fl.f.empty(), "--f", cmd);
  return for_flag("--f", [&] { return parse_periodic_fn_list(fl.f); });
}

QVector q_of(const Flags& fl, const std::string& cmd) {
  require(!fl.q.empty(), "--q", cmd);
  return for_flag("--q", [&] {
    QVector out;
    for (auto x : parse_int_list(fl.q)) {
      if (x < 0 || x > 64) throw std::invalid_argument("entries must lie in [0, 64]");
      out.push_back(static_cast<unsigned>(x));
    }
    return out;
  });
}

std::size_t index_of(const std::optional<long>& v, const char* flag, const std::string& cmd, std::size_t size) {
  require(v.has_value(), flag, cmd);
  if (*v < 0 || static_cast<std::size_t>(*v) >= size) {
    throw FlagError(std::string(flag) + ": index " + std::to_string(*v) + " out of range");
  }
  return static_cast<std::size_t>(*v);
}

TruncationPlan plan_of(const Flags& fl, long default_bound) {
  TruncationPlan plan;
  plan.bound = fl.N.value_or(default_bound);
  if (plan.bound < 1 || plan.bound > 1000000) throw FlagError("--N: must lie in [1, 1000000]");
  if (fl.pairing == "symmetric") {
    plan.pairing = TruncationPlan::Pairing::symmetric;
  } else if (fl.pairing == "none") {
    plan.pairing = TruncationPlan::Pairing::none;
  } else {
    throw FlagError("--pairing: expected symmetric or none");
  }
  return plan;
}

Value plan_value(const TruncationPlan& plan) {
  Value v = Value::object();
  v.set("N", static_cast<long>(plan.bound));
  v.set("pairing", plan.pairing == TruncationPlan::Pairing::symmetric ? "symmetric" : "none");
  return v;
}

Scalar symbolic_scalar(const SymbolicValue& s) {
  if (s.is_rational()) return s.coeff();
  return s.numeric();
}

QVector bernoulli_degrees(const std::vector<PeriodicFn>& fs) {
  QVector q;
  for (const auto& f : fs) {
    if (f.kind() != PeriodicFn::Kind::bernoulli) {
      throw FlagError("--f: this method needs Bernoulli descriptors b:q");
    }
    q.push_back(f.q());
  }
  return q;
}

bool all_kind(const std::vector<PeriodicFn>& fs, PeriodicFn::Kind kind) {
  return std::all_of(fs.begin(), fs.end(), [&](const PeriodicFn& f) { return f.kind() == kind; });
}

bool exact_method(const std::string& m) {
  return m == "rademacher" || m == "shifted" || m == "r1" || m == "integral" || m == "power-basis";
}

ReciprocityReport compute_report(const Flags& fl, const std::string& cmd) {
  const std::string& m = fl.method;
  require(!m.empty(), "--method", cmd);
  const NuVector nu = nu_of(fl, cmd);

  if (m == "rademacher") {
    const auto fs = fl.f.empty() ? parse_periodic_fn_list("b:1,b:1,b:1") : f_of(fl, cmd);
    if (fs.size() != nu.size()) throw FlagError("--f: needs one descriptor per entry of --nu");
    const Rational rhs = for_flag("--nu", [&] { return rademacher_rhs(nu); });
    return make_report(reciprocity_lhs(fs, nu), rhs, m);
  }
  if (m == "shifted") {
    const auto fs = f_of(fl, cmd);
    if (fs.size() != 3 || !all_kind(fs, PeriodicFn::Kind::shifted_frac)) {
      throw FlagError("--f: shifted needs three shift:a descriptors");
    }
    const Rational rhs = for_flag("--nu", [&] { return shifted_rhs(nu, {fs[0].shift(), fs[1].shift(), fs[2].shift()}); });
    return make_report(reciprocity_lhs(fs, nu), rhs, m);
  }
  if (m == "r1") {
    std::vector<PeriodicFn> fs;
    if (!fl.f.empty()) {
      fs = f_of(fl, cmd);
    } else {
      const QVector q = q_of(fl, cmd);
      if (q.size() != 1) throw FlagError("--q: r1 takes a single degree");
      fs = {PeriodicFn::bernoulli(1), for_flag("--q", [&] { return PeriodicFn::bernoulli(q[0]); })};
    }
    if (fs.size() != 2 || !(fs[0] == PeriodicFn::bernoulli(1)) || fs[1].kind() != PeriodicFn::Kind::bernoulli) {
      throw FlagError("--f: r1 needs b:1,b:q");
    }
    const Rational rhs = for_flag("--nu", [&] { return r1_closed_form(nu, fs[1].q()); });
    return make_report(reciprocity_lhs(fs, nu), rhs, m);
  }
  if (m == "integral") {
    const auto fs = f_of(fl, cmd);
    const Rational rhs = for_flag("--f", [&] { return integral_recip_rhs(fs, nu); });
    return make_report(reciprocity_lhs(fs, nu), rhs, m);
  }
  if (m == "power-basis") {
    const QVector q = q_of(fl, cmd);
    return for_flag("--q", [&] { return power_basis_recip_check(q, nu); });
  }
  if (m == "fourier" || m == "bernoulli-r2") {
    const QVector q = fl.q.empty() ? bernoulli_degrees(f_of(fl, cmd)) : q_of(fl, cmd);
    const TruncationPlan plan = plan_of(fl, nu.r() == 1 ? 10000 : 2000);
    return for_flag("--q", [&] {
      return m == "fourier" ? bernoulli_recip_general(nu, q, plan) : bernoulli_recip_r2(nu, q, plan);
    });
  }
  if (m == "exp" || m == "cos" || m == "sin") {
    const std::size_t k = index_of(fl.k, "--k", cmd, nu.size());
    const PeriodicFn one = m == "exp" ? PeriodicFn::exp_e() : m == "cos" ? PeriodicFn::cos() : PeriodicFn::sin();
    const std::vector<PeriodicFn> fs(nu.size(), one);
    Scalar rhs;
    if (m == "exp") {
      rhs = Rational(exp_closed_form(nu, k));
    } else if (m == "cos") {
      rhs = cos_closed_form(nu, k);
    } else {
      rhs = symbolic_scalar(sin_closed_form(nu, k));
    }
    return make_report(dedekind_sum(fs, nu, k), rhs, m);
  }
  throw FlagError("--method: unknown method '" + m + "'");
}

double magnitude(const Scalar& s) { return std::abs(to_complex(s)); }

OutputFormat format_of(const Flags& fl, OutputFormat fallback) {
  if (fl.format.empty()) return fallback;
  if (fl.format == "json") return OutputFormat::json;
  if (fl.format == "csv") return OutputFormat::csv;
  if (fl.format == "human") return OutputFormat::human;
  throw FlagError("--format: expected json, csv or human");
}

int cmd_sum(const Flags& fl, std::ostream& out) {
  const auto fs = f_of(fl, "sum");
  const NuVector nu = nu_of(fl, "sum");
  if (fs.size() != nu.size()) throw FlagError("--f: needs one descriptor per entry of --nu");
  const std::size_t k = index_of(fl.k, "--k", "sum", nu.size());
  Value v = Value::object();
  v.set("f", to_string(std::span<const PeriodicFn>(fs)));
  v.set("nu", to_value(std::span<const std::int64_t>(nu.entries())));
  v.set("k", static_cast<long>(k));
  v.set("value", to_value(dedekind_sum(fs, nu, k), fl.numeric));
  out << render(v, format_of(fl, OutputFormat::json));
  return exit_ok;
}

int cmd_recip(const Flags& fl, std::ostream& out) {
  const ReciprocityReport report = compute_report(fl, "recip");
  out << render(to_value(report, fl.numeric), format_of(fl, OutputFormat::json));
  return exit_ok;
}

int cmd_verify(const Flags& fl, std::ostream& out) {
  const ReciprocityReport report = compute_report(fl, "verify");
  const bool exact = is_exact(report.residual);
  double tol = 0.0;
  if (fl.tol) {
    tol = *fl.tol;
  } else if (!exact_method(fl.method)) {
    tol = (fl.method == "fourier" || fl.method == "bernoulli-r2") ? 1e-3 : 1e-9;
  }
  if (tol < 0) throw FlagError("--tol: must be nonnegative");
  bool pass;
  if (exact) {
    pass = std::get<Rational>(report.residual) == 0 || magnitude(report.residual) <= tol * std::max(magnitude(report.lhs), 1e-3);
  } else {
    // Relative to |lhs|; when lhs vanishes the tolerance is read as tol / 1000 absolute.
    pass = magnitude(report.residual) <= tol * std::max(magnitude(report.lhs), 1e-3);
  }
  Value v = to_value(report, fl.numeric);
  v.set("tol", tol);
  v.set("pass", pass);
  out << render(v, format_of(fl, OutputFormat::json));
  return pass ? exit_ok : exit_tolerance;
}

int cmd_franel(const Flags& fl, std::ostream& out) {
  const QVector q = q_of(fl, "franel");
  require(!fl.nu.empty(), "--nu", "franel");
  const auto nus = for_flag("--nu", [&] { return parse_int_list(fl.nu); });
  const Rational value = for_flag("--nu", [&] { return franel_integral(q, nus); });
  Value v = Value::object();
  v.set("value", to_value(value, fl.numeric));
  out << render(v, format_of(fl, OutputFormat::json));
  return exit_ok;
}

int cmd_hj(const Flags& fl, std::ostream& out) {
  const NuVector nu = nu_of(fl, "hj");
  if (nu.r() != 2) throw FlagError("--nu: hj needs three entries");
  const std::size_t l = index_of(fl.l, "--l", "hj", 3);
  const ConeFan fan = hj_generators(nu, l);
  const std::int64_t probe = fl.probe.value_or(3 * *std::max_element(nu.entries().begin(), nu.entries().end()));
  if (probe < 1 || probe > 100000) throw FlagError("--probe: must lie in [1, 100000]");
  Value v = Value::object();
  v.set("nu", to_value(std::span<const std::int64_t>(nu.entries())));
  v.set("l", static_cast<long>(l));
  v.set("epsilon", static_cast<long>(epsilon_l(nu, l)));
  v.set("normal", to_value(fan.normal));
  Value gens = Value::array();
  for (const auto& g : fan.generators) gens.push(to_value(g));
  v.set("generators", std::move(gens));
  v.set("hj", to_value(fan.hj));
  v.set("probe_bound", static_cast<long>(probe));
  v.set("unimodular", verify_unimodular(fan, probe));
  out << render(v, format_of(fl, OutputFormat::json));
  return exit_ok;
}

int cmd_zeta(const Flags& fl, std::ostream& out) {
  const NuVector nu = nu_of(fl, "zeta");
  const QVector q = q_of(fl, "zeta");
  if (q.size() != nu.size()) throw FlagError("--q: needs one entry per entry of --nu");
  const TruncationPlan plan = plan_of(fl, nu.r() == 1 ? 10000 : 2000);
  const std::string& var = fl.variant;
  Value v = Value::object();
  v.set("variant", var);
  if (var == "full" || var == "Y" || var == "Z" || var == "plain") {
    const ZetaVariant zv = var == "full" ? ZetaVariant::full
                           : var == "Y"  ? ZetaVariant::Y
                           : var == "Z"  ? ZetaVariant::Z
                                         : ZetaVariant::plain;
    const std::size_t k = var == "plain" ? 0 : index_of(fl.k, "--k", "zeta", nu.size());
    const TruncatedValue t = for_flag("--q", [&] { return multiple_zeta_trunc(nu, q, k, zv, plan); });
    v.set("value", t.value);
    v.set("plan", plan_value(plan));
    v.set("pairing", plan_value(plan).fields()[1].second);
    v.set("points_used", static_cast<unsigned long>(t.points_used));
  } else if (var == "combined") {
    const auto [lhs, rhs] = for_flag("--q", [&] { return combined_Y_identity(nu, q, plan); });
    v.set("lhs", lhs);
    v.set("rhs", rhs);
    v.set("plan", plan_value(plan));
    v.set("pairing", plan_value(plan).fields()[1].second);
  } else if (var == "z-closed") {
    const std::size_t k = index_of(fl.k, "--k", "zeta", nu.size());
    const SymbolicValue z = for_flag("--q", [&] { return Z_closed_r2(nu, q, k); });
    v.set("value", to_value(z));
    v.set("numeric", z.numeric().real());
  } else if (var == "q-sum") {
    const std::size_t k = index_of(fl.k, "--k", "zeta", nu.size());
    v.set("value", for_flag("--q", [&] { return q_sum(nu, q, k, plan); }));
    v.set("plan", plan_value(plan));
    v.set("pairing", plan_value(plan).fields()[1].second);
  } else if (var == "bound") {
    const std::size_t k = index_of(fl.k, "--k", "zeta", nu.size());
    const BoundReport b = for_flag("--q", [&] { return bound_report(nu, q, k, plan); });
    v.set("ok", b.ok);
    v.set("max_y", b.max_y);
    v.set("y_bound", b.y_bound);
    v.set("max_z", b.max_z);
    v.set("z_bound", b.z_bound);
    v.set("abs_zeta", b.abs_zeta);
    v.set("zeta_bound", b.zeta_bound);
    v.set("plan", plan_value(plan));
  } else {
    throw FlagError("--variant: expected full, Y, Z, plain, combined, z-closed, q-sum or bound");
  }
  out << render(v, format_of(fl, OutputFormat::json));
  return exit_ok;
}

Value sweep_row(const std::string& nu, const Rational& lhs, const Rational& rhs, const std::string& method,
                bool numeric) {
  const Rational residual = lhs - rhs;
  Value row = Value::object();
  row.set("nu", nu);
  row.set("lhs", to_value(lhs, numeric));
  row.set("rhs", to_value(rhs, numeric));
  row.set("residual", to_value(residual, numeric));
  row.set("method", method);
  row.set("flag", residual == 0 ? "" : "MISMATCH");
  return row;
}

int cmd_sweep(const Flags& fl, std::ostream& out) {
  require(!fl.method.empty(), "--method", "sweep");
  require(fl.max.has_value(), "--max", "sweep");
  const long max = *fl.max;
  std::vector<Value> rows;
  bool mismatch = false;
  auto push = [&](Value row) {
    mismatch = mismatch || row.fields().back().second.text() != "";
    rows.push_back(std::move(row));
  };
  if (fl.method == "rademacher") {
    if (max < 1 || max > 60) throw FlagError("--max: rademacher sweep allows 1..60");
    const auto fs = parse_periodic_fn_list("b:1,b:1,b:1");
    for (long a = 1; a <= max; ++a) {
      for (long b = a + 1; b <= max; ++b) {
        if (gcd(a, b) != 1) continue;
        for (long c = b + 1; c <= max; ++c) {
          if (gcd(a, c) != 1 || gcd(b, c) != 1) continue;
          const NuVector nu({a, b, c});
          push(sweep_row(to_string(nu), std::get<Rational>(reciprocity_lhs(fs, nu)), rademacher_rhs(nu),
                         "rademacher", fl.numeric));
        }
      }
    }
  } else if (fl.method == "franel") {
    if (max < 1 || max > 200) throw FlagError("--max: franel sweep allows 1..200");
    const unsigned q[2] = {1, 1};
    for (long m = 1; m <= max; ++m) {
      for (long n = m + 1; n <= max; ++n) {
        const std::int64_t nus[2] = {m, n};
        const long g = gcd(m, n);
        Rational expected(g * g, 12 * m * n);
        expected.canonicalize();
        push(sweep_row(std::to_string(m) + "," + std::to_string(n), franel_integral(q, nus), expected, "franel",
                       fl.numeric));
      }
    }
  } else if (fl.method == "r1") {
    if (max < 1 || max > 200) throw FlagError("--max: r1 sweep allows 1..200");
    QVector qs = fl.q.empty() ? QVector{2, 4, 6} : q_of(fl, "sweep");
    for (unsigned q : qs) {
      if (q < 1) throw FlagError("--q: r1 sweep needs degrees >= 1");
      const std::vector<PeriodicFn> fs{PeriodicFn::bernoulli(1), PeriodicFn::bernoulli(q)};
      for (long a = 1; a <= max; ++a) {
        for (long b = 1; b <= max; ++b) {
          if (a == b || gcd(a, b) != 1) continue;
          const NuVector nu({a, b});
          push(sweep_row(to_string(nu) + ";q=" + std::to_string(q), std::get<Rational>(reciprocity_lhs(fs, nu)),
                         r1_closed_form(nu, q), "r1", fl.numeric));
        }
      }
    }
  } else {
    throw FlagError("--method: sweep supports rademacher, franel or r1");
  }
  out << render_table(rows, format_of(fl, OutputFormat::csv));
  return mismatch ? exit_tolerance : exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Dedekind sums and their reciprocity formulas"};
  app.name("recip");
  app.require_subcommand(1);
  app.fallthrough();
  Flags fl;
  app.add_option("--nu", fl.nu, "comma-separated pairwise coprime positive integers");
  app.add_option("--f", fl.f, "function descriptors: b:q pow:q shift:p/q poly:c0,c1,.. sin cos e");
  app.add_option("--q", fl.q, "comma-separated exponents");
  app.add_option("--k", fl.k, "index k");
  app.add_option("--l", fl.l, "cone index l");
  app.add_option("--N", fl.N, "truncation bound");
  app.add_option("--tol", fl.tol, "tolerance for verify");
  app.add_option("--method", fl.method,
                 "rademacher shifted r1 integral power-basis fourier bernoulli-r2 exp cos sin");
  app.add_option("--format", fl.format, "json csv human");
  app.add_flag("--numeric", fl.numeric, "print rationals as floats");
  app.add_option("--variant", fl.variant, "zeta variant: full Y Z plain combined z-closed q-sum bound");
  app.add_option("--pairing", fl.pairing, "symmetric or none");
  app.add_option("--max", fl.max, "sweep range");
  app.add_option("--probe", fl.probe, "probe box for the unimodularity check");

  const std::vector<std::pair<const char*, const char*>> commands{
      {"sum", "one Dedekind sum S_f(nu|nu_k)"},
      {"recip", "reciprocity report for a method"},
      {"franel", "exact integral of a product of dilated Bernoulli functions"},
      {"hj", "Hirzebruch-Jung subdivision of a boundary cone"},
      {"zeta", "truncated and closed-form zeta values"},
      {"verify", "reciprocity report with a tolerance check"},
      {"sweep", "bulk exact verification as a table"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "sum") return cmd_sum(fl, out);
    if (cmd == "recip") return cmd_recip(fl, out);
    if (cmd == "verify") return cmd_verify(fl, out);
    if (cmd == "franel") return cmd_franel(fl, out);
    if (cmd == "hj") return cmd_hj(fl, out);
    if (cmd == "zeta") return cmd_zeta(fl, out);
    if (cmd == "sweep") return cmd_sweep(fl, out);
  } catch (const FlagError& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}

}  // namespace recip::cli
