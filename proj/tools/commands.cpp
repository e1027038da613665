#include "commands.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "lerch/batch.hpp"
#include "lerch/engine.hpp"
#include "lerch/identities.hpp"

namespace lerch::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kMethodNames = {
    "auto", "series", "integral", "pv", "inverse", "integer-a", "hurwitz"};

// Routes tried by compare and by the sweep cross-check, in this order.
const std::vector<Method> kRoutes = {Method::Series,  Method::Integral,
                                     Method::PrincipalValue, Method::Inverse,
                                     Method::IntegerShift,   Method::Hurwitz};

std::string num(double x) { return fmt::format("{:.17g}", x); }

json complex_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

std::string diagnostic(const LerchError& e) {
  return fmt::format("{}: {}", to_string(e.kind()), e.what());
}

/// CLI11 validator for "re,im" arguments.
const CLI::Validator kComplexArg(
    [](std::string& text) -> std::string {
      return parse_complex(text) ? std::string{}
                                 : "expected a complex number 're,im', got '" +
                                       text + "'";
    },
    "RE,IM");

struct PointOptions {
  std::string z;
  int n = 1;
  std::string a;
  std::string method = "auto";
  std::optional<double> tol;
  std::string format = "plain";

  LerchQuery query() const { return {*parse_complex(z), n, *parse_complex(a)}; }
};

void add_point_options(CLI::App* cmd, PointOptions& opts, bool with_method) {
  cmd->add_option("--z", opts.z, "argument z as re,im")
      ->required()
      ->check(kComplexArg);
  cmd->add_option("--n", opts.n, "integer order n >= 1")->required();
  cmd->add_option("--a", opts.a, "shift a as re,im")
      ->required()
      ->check(kComplexArg);
  if (with_method) {
    cmd->add_option("--method", opts.method, "evaluation route")
        ->check(CLI::IsMember(kMethodNames));
  }
  cmd->add_option("--tol", opts.tol, "target tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
}

double resolve_tol(const std::optional<double>& flag) {
  return flag ? *flag : default_tolerance();
}

// ---------------------------------------------------------------------------
// eval

int cmd_eval(const PointOptions& opts, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tol(opts.tol);
  const LerchQuery q = opts.query();
  EvalResult r;
  try {
    r = evaluate(q, method_from_string(opts.method), tol);
  } catch (const LerchError& e) {
    err << "error: " << diagnostic(e) << '\n';
    return kExitDomain;
  }
  if (!r.converged) {
    err << fmt::format("warning: {} route did not reach tol {}; error estimate {}\n",
                       to_string(r.method), num(tol), num(r.err_estimate));
  }

  if (opts.format == "json") {
    json rec{{"z", complex_json(q.z)},        {"n", q.n},
             {"a", complex_json(q.a)},        {"value", complex_json(r.value)},
             {"err", r.err_estimate},         {"method", to_string(r.method)},
             {"work", r.work},                {"converged", r.converged}};
    out << rec.dump() << '\n';
  } else if (opts.format == "csv") {
    out << "z_re,z_im,n,a_re,a_im,value_re,value_im,err,method,work,converged\r\n";
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\r\n", num(q.z.real()),
                       num(q.z.imag()), q.n, num(q.a.real()), num(q.a.imag()),
                       num(r.value.real()), num(r.value.imag()),
                       num(r.err_estimate), to_string(r.method), r.work,
                       r.converged ? "true" : "false");
  } else {
    out << fmt::format("value     = {} {} {}i\n", num(r.value.real()),
                       r.value.imag() < 0 ? '-' : '+',
                       num(std::abs(r.value.imag())));
    out << fmt::format("err       = {}\n", num(r.err_estimate));
    out << fmt::format("method    = {}\n", to_string(r.method));
    out << fmt::format("work      = {}\n", r.work);
    out << fmt::format("converged = {}\n", r.converged);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// compare

int cmd_compare(const PointOptions& opts, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tol(opts.tol);
  const LerchQuery q = opts.query();

  std::vector<EvalResult> rows;
  std::string last_error;
  for (Method m : kRoutes) {
    try {
      rows.push_back(evaluate(q, m, tol));
    } catch (const LerchError& e) {
      last_error = diagnostic(e);
    }
  }
  if (rows.empty()) {
    err << "error: no route admits this point; last diagnostic: " << last_error
        << '\n';
    return kExitDomain;
  }

  // Routes that missed their own tolerance are listed but not compared.
  double deviation = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (!rows[i].converged || !rows[j].converged) continue;
      deviation = std::max(deviation, mixed_error(rows[i].value, rows[j].value));
    }
  }
  const bool agree = deviation <= 10.0 * tol;

  if (opts.format == "json") {
    for (const auto& r : rows) {
      json rec{{"method", to_string(r.method)}, {"value", complex_json(r.value)},
               {"err", r.err_estimate},         {"work", r.work},
               {"converged", r.converged}};
      out << rec.dump() << '\n';
    }
    json summary{{"max_deviation", deviation}, {"limit", 10.0 * tol},
                 {"agree", agree}};
    out << summary.dump() << '\n';
  } else if (opts.format == "csv") {
    out << "method,value_re,value_im,err,work,converged\r\n";
    for (const auto& r : rows) {
      out << fmt::format("{},{},{},{},{},{}\r\n", to_string(r.method),
                         num(r.value.real()), num(r.value.imag()),
                         num(r.err_estimate), r.work,
                         r.converged ? "true" : "false");
    }
    out << fmt::format("max-deviation,{},,,,\r\n", num(deviation));
  } else {
    out << fmt::format("{:<10} {:>24} {:>24} {:>10} {:>9} {}\n", "method",
                       "re", "im", "err", "work", "converged");
    for (const auto& r : rows) {
      out << fmt::format("{:<10} {:>24} {:>24} {:>10.3g} {:>9} {}\n",
                         to_string(r.method), num(r.value.real()),
                         num(r.value.imag()), r.err_estimate, r.work,
                         r.converged ? "yes" : "no");
    }
    out << fmt::format("max pairwise deviation {:.3g} (limit {:.3g})\n",
                       deviation, 10.0 * tol);
  }
  if (!agree) {
    err << fmt::format("error: routes disagree by {} > 10 * tol\n", num(deviation));
    return kExitDisagreement;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckOptions {
  std::string suite = "all";
  std::size_t grid = 50;
  std::uint64_t seed = 7;
  std::optional<double> tol;
};

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tol(opts.tol);
  const auto records =
      run_suite(suite_from_string(opts.suite), opts.grid, opts.seed, tol);
  std::size_t passed = 0;
  for (const auto& rec : records) {
    json line{{"identity", rec.identity},
              {"point",
               {{"z", complex_json(rec.point.z)},
                {"n", rec.point.n},
                {"a", complex_json(rec.point.a)}}},
              {"residual", rec.residual},
              {"threshold", rec.threshold},
              {"pass", rec.pass}};
    if (!rec.note.empty()) line["note"] = rec.note;
    out << line.dump() << '\n';
    passed += rec.pass ? 1 : 0;
  }
  err << fmt::format("{}/{} checks passed\n", passed, records.size());
  return passed == records.size() ? kExitOk : kExitDisagreement;
}

// ---------------------------------------------------------------------------
// sweep

struct Range {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  double at(int i) const {
    if (steps <= 1) return min;
    return min + (max - min) * static_cast<double>(i) / (steps - 1);
  }
};

struct SweepOptions {
  int n = 1;
  Range r{0.5, 0.5, 1};
  Range arg{0.0, 0.0, 1};
  Range a_re{1.0, 1.0, 1};
  Range a_im{0.0, 0.0, 1};
  std::optional<std::size_t> random;
  std::uint64_t seed = 7;
  std::string out_path = "-";
  std::string format = "csv";
  std::string method = "auto";
  std::optional<double> tol;
  bool cross_check = false;
};

void add_range(CLI::App* cmd, const std::string& name, Range& range) {
  cmd->add_option("--" + name + "-min", range.min);
  cmd->add_option("--" + name + "-max", range.max);
  cmd->add_option("--" + name + "-steps", range.steps)
      ->check(CLI::NonNegativeNumber);
}

std::vector<LerchQuery> sweep_points(const SweepOptions& opts) {
  std::vector<LerchQuery> points;
  if (opts.random) {
    GridRng rng(opts.seed);
    for (std::size_t k = 0; k < *opts.random; ++k) {
      const double r = rng.uniform(opts.r.min, opts.r.max);
      const double theta = rng.uniform(opts.arg.min, opts.arg.max);
      const double are = rng.uniform(opts.a_re.min, opts.a_re.max);
      const double aim = rng.uniform(opts.a_im.min, opts.a_im.max);
      points.push_back({std::polar(r, theta), opts.n, {are, aim}});
    }
    return points;
  }
  for (int i = 0; i < opts.r.steps; ++i)
    for (int j = 0; j < opts.arg.steps; ++j)
      for (int k = 0; k < opts.a_re.steps; ++k)
        for (int l = 0; l < opts.a_im.steps; ++l)
          points.push_back({std::polar(opts.r.at(i), opts.arg.at(j)), opts.n,
                            {opts.a_re.at(k), opts.a_im.at(l)}});
  return points;
}

struct SweepRow {
  batch::Outcome primary;
  std::string check;         // "", "ok", "mismatch" or "none"
  std::string check_method;  // route used for the cross-check
};

SweepRow sweep_row(const LerchQuery& q, Method method, double tol,
                   bool cross_check) {
  SweepRow row{batch::evaluate_one(q, method, tol), {}, {}};
  if (!cross_check || row.primary.error) return row;
  const EvalResult& first = row.primary.result;
  row.check = "none";
  for (Method m : kRoutes) {
    if (m == first.method) continue;
    const batch::Outcome other = batch::evaluate_one(q, m, tol);
    if (other.error || !other.result.converged) continue;
    const double gap = std::abs(first.value - other.result.value);
    const double allowed = first.err_estimate + other.result.err_estimate +
                           10.0 * tol * std::max(1.0, std::abs(other.result.value));
    row.check = gap <= allowed ? "ok" : "mismatch";
    row.check_method = std::string(to_string(m));
    break;
  }
  return row;
}

void write_csv_row(std::ostream& os, const LerchQuery& q, const SweepRow& row) {
  os << fmt::format("{},{},{},{},{},", num(q.z.real()), num(q.z.imag()), q.n,
                    num(q.a.real()), num(q.a.imag()));
  const auto& o = row.primary;
  if (o.error) {
    os << fmt::format(",,,,,,,,{}\r\n",
                      csv_field(fmt::format("{}: {}", to_string(*o.error), o.message)));
    return;
  }
  const auto& r = o.result;
  os << fmt::format("{},{},{},{},{},{},{},{},\r\n", num(r.value.real()),
                    num(r.value.imag()), num(r.err_estimate), to_string(r.method),
                    r.work, r.converged ? "true" : "false", row.check,
                    row.check_method);
}

void write_json_row(std::ostream& os, const LerchQuery& q, const SweepRow& row) {
  json rec{{"z", complex_json(q.z)}, {"n", q.n}, {"a", complex_json(q.a)}};
  const auto& o = row.primary;
  if (o.error) {
    rec["error"] = fmt::format("{}: {}", to_string(*o.error), o.message);
  } else {
    rec["value"] = complex_json(o.result.value);
    rec["err"] = o.result.err_estimate;
    rec["method"] = to_string(o.result.method);
    rec["work"] = o.result.work;
    rec["converged"] = o.result.converged;
    if (!row.check.empty()) {
      rec["check"] = row.check;
      rec["check_method"] = row.check_method;
    }
  }
  os << rec.dump() << '\n';
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tol(opts.tol);
  const Method method = method_from_string(opts.method);
  const auto points = sweep_points(opts);
  const auto rows = batch::parallel_map(points.size(), [&](std::size_t i) {
    return sweep_row(points[i], method, tol, opts.cross_check);
  });

  std::ofstream file;
  std::ostream* os = &out;
  if (opts.out_path != "-") {
    file.open(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write to '" << opts.out_path << "'\n";
      return kExitUsage;
    }
    os = &file;
  }

  if (opts.format == "csv") {
    *os << "z_re,z_im,n,a_re,a_im,value_re,value_im,err,method,work,converged,"
           "check,check_method,error\r\n";
  }
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (opts.format == "csv") {
      write_csv_row(*os, points[i], rows[i]);
    } else {
      write_json_row(*os, points[i], rows[i]);
    }
    mismatches += rows[i].check == "mismatch" ? 1 : 0;
  }
  os->flush();
  if (!*os) {
    err << "error: write to '" << opts.out_path << "' failed\n";
    return kExitUsage;
  }
  if (mismatches > 0) {
    err << fmt::format("error: {} of {} rows failed the cross-check\n",
                       mismatches, rows.size());
    return kExitDisagreement;
  }
  return kExitOk;
}

}  // namespace

std::optional<Complex> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto parse = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    std::istringstream in(s);
    in.imbue(std::locale::classic());
    double v = 0.0;
    in >> v;
    if (in.fail() || !in.eof()) return std::nullopt;
    return v;
  };
  if (comma == std::string::npos) {
    const auto re = parse(text);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }
  const auto re = parse(text.substr(0, comma));
  const auto im = parse(text.substr(comma + 1));
  if (!re || !im) return std::nullopt;
  return Complex{*re, *im};
}

double default_tolerance() {
  const char* env = std::getenv("LERCH_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  const auto parsed = parse_complex(env);
  if (!parsed || parsed->imag() != 0.0 || !(parsed->real() > 0.0) ||
      !std::isfinite(parsed->real())) {
    throw std::invalid_argument(std::string("LERCH_TOL must be a positive "
                                            "number, got '") + env + "'");
  }
  return parsed->real();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lerch transcendent Phi(z, n, a) for integer order n"};
  app.name("lerch");
  app.require_subcommand(1);

  PointOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "evaluate Phi at one point");
  add_point_options(eval, eval_opts, true);

  PointOptions compare_opts;
  auto* compare =
      app.add_subcommand("compare", "evaluate every admissible route and compare");
  add_point_options(compare, compare_opts, false);

  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "certify identities on seeded grids");
  check->add_option("--suite", check_opts.suite)
      ->check(CLI::IsMember(
          {"all", "symmetry", "recurrences", "reflections", "theorem1"}));
  check->add_option("--grid", check_opts.grid, "points per identity");
  check->add_option("--seed", check_opts.seed);
  check->add_option("--tol", check_opts.tol)->check(CLI::PositiveNumber);

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "tabulate Phi over a parameter grid");
  sweep->add_option("--n", sweep_opts.n)->required();
  add_range(sweep, "r", sweep_opts.r);
  add_range(sweep, "arg", sweep_opts.arg);
  add_range(sweep, "a-re", sweep_opts.a_re);
  add_range(sweep, "a-im", sweep_opts.a_im);
  sweep->add_option("--random", sweep_opts.random,
                    "draw this many uniform points from the ranges instead");
  sweep->add_option("--seed", sweep_opts.seed);
  sweep->add_option("--out", sweep_opts.out_path, "output file, '-' for stdout");
  sweep->add_option("--format", sweep_opts.format)
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--method", sweep_opts.method)
      ->check(CLI::IsMember(kMethodNames));
  sweep->add_option("--tol", sweep_opts.tol)->check(CLI::PositiveNumber);
  sweep->add_flag("--cross-check", sweep_opts.cross_check,
                  "verify each row against a second route");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    err << "run with --help for the list of commands and flags\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_opts, out, err);
    if (compare->parsed()) return cmd_compare(compare_opts, out, err);
    if (check->parsed()) return cmd_check(check_opts, out, err);
    if (sweep->parsed()) return cmd_sweep(sweep_opts, out, err);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LerchError& e) {
    err << "error: " << diagnostic(e) << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace lerch::cli
