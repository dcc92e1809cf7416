#include "trigverify/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "trigverify/bfile.hpp"
#include "trigverify/errors.hpp"
#include "trigverify/exact_seq.hpp"
#include "trigverify/modular.hpp"
#include "trigverify/numeric.hpp"
#include "trigverify/parallel.hpp"
#include "trigverify/report.hpp"
#include "trigverify/series.hpp"

namespace trigverify::cli {

namespace {

using numeric::EvalContext;

// Input problems that should exit with kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<unsigned long> max_n;
  std::optional<std::uint64_t> prime_bound;
  std::optional<std::size_t> terms;
  long prec_bits = 256;
  std::optional<std::string> x, t, a, b;
  std::string format = "text";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string output;
  std::string suite = "all";
  std::string target;
  std::string file;
  std::string generator = "S";
  std::string fixtures = TRIGVERIFY_FIXTURE_DIR;
};

Rational rational_flag(const std::optional<std::string>& flag, const Rational& fallback,
                       const char* name) {
  if (!flag) return fallback;
  try {
    return parse_rational(*flag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

EvalContext context(const Options& o, std::size_t default_terms) {
  try {
    return EvalContext(Precision(o.prec_bits), o.terms.value_or(default_terms));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Runs `check` for each input on the worker pool; exceptions become
// Status::Error items.
template <class T, class Fn>
void sweep(VerificationReport& report, const std::vector<T>& inputs, unsigned jobs,
           const std::string& claim, const std::string& param, Fn check) {
  auto items = ordered_parallel_map(inputs, jobs, [&](const T& in) {
    try {
      return check(in);
    } catch (const std::exception& e) {
      return ReportItem{claim, param + "=" + std::to_string(in), Status::Error, {{"error", e.what()}}};
    }
  });
  for (auto& item : items) report.add(std::move(item));
}

std::vector<unsigned long> range(unsigned long lo, unsigned long hi) {
  std::vector<unsigned long> v;
  for (unsigned long n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

ReportItem pass_if(bool ok, std::string claim, std::string params,
                   std::map<std::string, std::string> details = {}) {
  return ReportItem{std::move(claim), std::move(params), ok ? Status::Pass : Status::Fail,
                    std::move(details)};
}

// --- verify ----------------------------------------------------------------

void suite_divisibility(VerificationReport& r, unsigned long max_n, unsigned jobs) {
  sweep(r, range(1, max_n), jobs, "divisibility", "n", [](unsigned long n) {
    return pass_if(exact_seq::check_divisibility(n), "divisibility", "n=" + std::to_string(n));
  });
}

void suite_integrality(VerificationReport& r, unsigned long max_n, unsigned jobs) {
  sweep(r, range(1, max_n), jobs, "s-integral", "n", [](unsigned long n) {
    const Rational s = exact_seq::s_binomial_def(n);
    return pass_if(is_integral(s) && s == exact_seq::s_product_formula(n), "s-integral",
                   "n=" + std::to_string(n));
  });
  sweep(r, range(1, max_n), jobs, "t-identity", "n", [](unsigned long n) {
    const Integer closed = exact_seq::t_closed_form(n);
    const Integer ident = exact_seq::t_integer_identity(n);
    return pass_if(closed == ident && closed > 0, "t-identity", "n=" + std::to_string(n));
  });
}

void add_congruences(VerificationReport& r, const std::vector<modular::CongruenceReport>& reports) {
  for (const auto& c : reports) r.add(to_item(c));
}

void suite_congruences(VerificationReport& r, std::uint64_t bound, unsigned jobs) {
  add_congruences(r, modular::sweep_sp_congruence(bound, jobs));
  add_congruences(r, modular::sweep_tp_congruence(bound, jobs));
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    if (p >= bound) break;
    for (std::uint64_t a = 1; a < p; ++a) {
      ReportItem item = to_item(modular::verify_fermat(Integer(static_cast<unsigned long>(a)), p));
      item.params += ",a=" + std::to_string(a);
      r.add(std::move(item));
    }
  }
}

void suite_guo(VerificationReport& r, unsigned long max_n, unsigned jobs) {
  add_congruences(r, modular::sweep_guo(max_n, jobs));
}

void suite_lemma32(VerificationReport& r, std::uint64_t bound, unsigned jobs) {
  add_congruences(r, modular::sweep_lemma32(bound, jobs));
  std::vector<std::uint64_t> odd;
  for (auto p : modular::primes_below(std::min<std::uint64_t>(bound, 100)))
    if (p != 2) odd.push_back(p);
  sweep(r, odd, jobs, "lemma32-product", "p", [](std::uint64_t p) {
    return pass_if(modular::lemma32_product_identity(p), "lemma32-product", "p=" + std::to_string(p));
  });
}

VerificationReport run_verify(const Options& o) {
  const unsigned long max_n = o.max_n.value_or(2000);
  const std::uint64_t bound = o.prime_bound.value_or(500);
  VerificationReport r("verify:" + o.suite);
  const bool all = o.suite == "all";
  if (all || o.suite == "divisibility") suite_divisibility(r, max_n, o.jobs);
  if (all || o.suite == "congruences") suite_congruences(r, bound, o.jobs);
  if (all || o.suite == "integrality") suite_integrality(r, std::min(max_n, 500ul), o.jobs);
  if (all || o.suite == "guo") suite_guo(r, max_n, o.jobs);
  if (all || o.suite == "lemma32") suite_lemma32(r, bound, o.jobs);
  return r;
}

// --- series ----------------------------------------------------------------

VerificationReport run_series(const Options& o) {
  const unsigned long max_n = o.max_n.value_or(200);
  VerificationReport r("series");
  const auto s_series = series::s_coefficients_via_series(max_n);
  for (unsigned long n = 0; n <= max_n; ++n)
    r.add(pass_if(s_series[n] == exact_seq::s_binomial_def(n), "s-series", "n=" + std::to_string(n),
                  {{"value", s_series[n].get_str()}}));
  try {
    const auto t_series = series::t_coefficients_via_series(max_n);
    for (unsigned long n = 1; n <= max_n; ++n)
      r.add(pass_if(t_series[n - 1] == Rational(exact_seq::t_closed_form(n)), "t-series",
                    "n=" + std::to_string(n), {{"value", t_series[n - 1].get_str()}}));
  } catch (const NonInteger& e) {
    r.add(ReportItem{"t-series", "", Status::Fail, {{"error", e.what()}}});
  }
  for (unsigned long t = 1; t <= 15; ++t) {
    const auto poly = series::multiple_angle_polynomial(t);
    std::ostringstream coeffs;
    for (std::size_t i = 0; i <= poly.order(); ++i)
      if (poly[i] != 0) coeffs << (coeffs.tellp() ? " " : "") << poly[i].get_str() << "x^" << i;
    r.add(pass_if(series::chebyshev_termination(t, 3 * t + 3),
                  t % 2 ? "chebyshev-sin" : "chebyshev-cos", "t=" + std::to_string(t),
                  {{"polynomial", coeffs.str()}}));
  }
  return r;
}

// --- eval ------------------------------------------------------------------

std::string x_param(const Rational& x, const EvalContext& ctx) {
  return "x=" + x.get_str() + ",prec=" + std::to_string(ctx.precision().bits);
}

void eval_gf(VerificationReport& r, const Rational& x, const EvalContext& ctx) {
  r.add(to_item(numeric::verify_gf_identity(x, ctx), x_param(x, ctx)));
}

void eval_conjecture(VerificationReport& r, const Rational& x, const EvalContext& ctx) {
  r.add(to_item(numeric::verify_conjecture_identity(x, ctx), x_param(x, ctx)));
}

void eval_conjecture_edges(VerificationReport& r, const EvalContext& ctx) {
  const Precision p = ctx.precision();
  const BigFloat edge = BigFloat(1, p) / (sqrt3(p) * 6L);
  r.add(to_item(numeric::verify_conjecture_identity(edge, ctx), "x=+1/(6sqrt3)"));
  r.add(to_item(numeric::verify_conjecture_identity(-edge, ctx), "x=-1/(6sqrt3)"));
}

void eval_prop(VerificationReport& r, const Rational& t, const Rational& x, const EvalContext& ctx) {
  const Precision p = ctx.precision();
  r.add(to_item(numeric::verify_prop_trig(BigFloat(t, p), BigFloat(x, p), ctx),
                "t=" + t.get_str() + ",x=" + x.get_str()));
}

void eval_prop_grid(VerificationReport& r, const EvalContext& ctx) {
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      eval_prop(r, make_rational(-27 + 6 * i, 9), make_rational(-9 + 2 * j, 9), ctx);
}

void eval_integral_defaults(VerificationReport& r, const EvalContext& ctx) {
  const Precision p = ctx.precision();
  const BigFloat b = sqrt3(p) * 6L;
  const BigFloat a(Rational(2, 3), p);
  r.add(to_item(numeric::verify_integral_theorem(a, b, BigFloat(1, p) / b, ctx),
                "a=2/3,b=6sqrt3,x1=1/(6sqrt3)"));
  r.add(to_item(numeric::verify_integral_theorem(a, b, BigFloat(p), ctx), "a=2/3,b=6sqrt3,x1=0"));
}

void eval_integral(VerificationReport& r, const Rational& a, const Rational& b, const Rational& x1,
                   const EvalContext& ctx) {
  const Precision p = ctx.precision();
  r.add(to_item(numeric::verify_integral_theorem(BigFloat(a, p), BigFloat(b, p), BigFloat(x1, p), ctx),
                "a=" + a.get_str() + ",b=" + b.get_str() + ",x1=" + x1.get_str()));
}

void eval_fvalue(VerificationReport& r, const EvalContext& ctx) {
  r.add(to_item(numeric::verify_f_value(ctx), "x=1/(6sqrt3)"));
  r.add(to_item(numeric::verify_f_series(ctx), "x=1/(6sqrt3),terms=" + std::to_string(ctx.max_terms())));
}

VerificationReport run_eval(const Options& o) {
  VerificationReport r("eval:" + o.target);
  const std::string& w = o.target;
  try {
    if (w == "gf") {
      eval_gf(r, rational_flag(o.x, Rational(1, 200), "x"), context(o, 10000));
    } else if (w == "sum13") {
      const auto ctx = context(o, 10000);
      r.add(to_item(numeric::verify_sum_over_2n3(ctx), "terms=" + std::to_string(ctx.max_terms())));
    } else if (w == "sum14") {
      const auto ctx = context(o, 1000000);
      r.add(to_item(numeric::verify_sum_at_boundary(ctx), "terms=" + std::to_string(ctx.max_terms())));
    } else if (w == "conjecture") {
      eval_conjecture(r, rational_flag(o.x, Rational(1, 20), "x"), context(o, 10000));
    } else if (w == "prop") {
      eval_prop(r, rational_flag(o.t, Rational(2, 3), "t"), rational_flag(o.x, Rational(1, 2), "x"),
                context(o, 1));
    } else if (w == "integral") {
      if (o.a || o.b || o.x)
        eval_integral(r, rational_flag(o.a, Rational(1, 2), "a"), rational_flag(o.b, Rational(1), "b"),
                      rational_flag(o.x, Rational(1, 2), "x"), context(o, 1));
      else
        eval_integral_defaults(r, context(o, 1));
    } else if (w == "fvalue") {
      eval_fvalue(r, context(o, 10000));
    } else {
      throw UsageError("unknown eval target '" + w + "'");
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const SingularParameter& e) {
    throw UsageError(e.what());
  }
  return r;
}

// --- radius ----------------------------------------------------------------

VerificationReport run_radius(const Options& o) {
  const unsigned long max_n = o.max_n.value_or(1600);
  const EvalContext ctx = context(o, 1);
  const Precision p = ctx.precision();
  VerificationReport r("radius");
  std::optional<BigFloat> previous;
  for (unsigned long n = 100; n <= max_n; n *= 2) {
    BigFloat est = numeric::radius_estimate(n, ctx);
    const bool ok = est.compare(108) < 0 && (!previous || est > *previous);
    r.add(pass_if(ok, "radius", "n=" + std::to_string(n),
                  {{"estimate", est.to_annotated_string(12)}}));
    previous = std::move(est);
  }
  previous.reset();
  for (unsigned long alpha = 2; alpha <= 50; ++alpha) {
    BigFloat err = numeric::stirling_relative_error(alpha, p);
    bool ok = !previous || err < *previous;
    if (alpha == 11) ok = ok && err.compare(Rational(1, 100)) < 0;
    r.add(pass_if(ok, "stirling", "alpha=" + std::to_string(alpha),
                  {{"relative-error", err.to_annotated_string(8)}}));
    previous = std::move(err);
  }
  return r;
}

// --- oeis / report -----------------------------------------------------------

VerificationReport run_oeis(const Options& o) {
  if (o.file.empty()) throw UsageError("oeis: --file is required");
  Generator g;
  try {
    g = parse_generator(o.generator);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SequenceTable table;
  try {
    table = load_bfile(o.file);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (table.entries.empty()) throw UsageError("oeis: '" + o.file + "' has no entries");
  return crosscheck(table, g);
}

struct Fixture {
  const char* file;
  Generator generator;
};

constexpr Fixture kFixtures[] = {
    {"A000984.txt", Generator::CentralBinomial},
    {"A005809.txt", Generator::Binomial3nN},
    {"A066802.txt", Generator::Binomial6n3n},
    {"A176898.txt", Generator::S},
    {"printed_s_values.txt", Generator::S},
};

VerificationReport run_report(const Options& o) {
  VerificationReport r("report");
  Options v = o;
  v.suite = "all";
  r.merge(run_verify(v));
  r.merge(run_series(o));

  const EvalContext ctx = context(o, 10000);
  for (const Rational& x : {Rational(1, 200), Rational(1, 150), Rational(1, 109)}) eval_gf(r, x, ctx);
  r.add(to_item(numeric::verify_sum_over_2n3(ctx), "terms=10000"));
  r.add(to_item(numeric::verify_sum_at_boundary(ctx.with_terms(1000000)), "terms=1000000"));
  for (int k = -5; k <= 5; ++k) eval_conjecture(r, make_rational(k, 100), ctx);
  eval_conjecture_edges(r, ctx.with_terms(100000));
  eval_prop_grid(r, ctx.with_precision(Precision(128)));
  eval_integral_defaults(r, ctx);
  eval_integral(r, Rational(1, 2), Rational(1), Rational(1, 2), ctx);
  eval_fvalue(r, ctx);
  r.merge(run_radius(o));

  for (const auto& f : kFixtures) {
    Options fo = o;
    fo.file = o.fixtures + "/" + f.file;
    fo.generator = std::string(to_string(f.generator));
    r.merge(run_oeis(fo));
  }
  return r;
}

// --- seq -------------------------------------------------------------------

std::string render_seq(const exact_seq::SequenceRows& rows, const std::string& format) {
  std::ostringstream out;
  if (format == "csv") {
    out << "n,S_n,T_n\n";
    for (const auto& row : rows)
      out << row.index << ',' << row.s_value.get_str() << ','
          << (row.t_value ? row.t_value->get_str() : "") << '\n';
  } else if (format == "json") {
    nlohmann::ordered_json doc;
    doc["name"] = "S,T";
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows)
      doc["rows"].push_back({{"n", row.index},
                             {"S", row.s_value.get_str()},
                             {"T", row.t_value ? nlohmann::ordered_json(row.t_value->get_str())
                                               : nlohmann::ordered_json()}});
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& row : rows)
      out << "n=" << row.index << "  S=" << row.s_value.get_str()
          << "  T=" << (row.t_value ? row.t_value->get_str() : "-") << '\n';
  }
  return out.str();
}

std::string render(const VerificationReport& r, const std::string& format) {
  if (format == "json") return to_json(r) + "\n";
  if (format == "csv") return to_csv(r);
  return to_text(r);
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file || !(file << text)) throw UsageError("cannot write '" + o.output + "'");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--max-n", o.max_n, "Largest index n to check");
  sub->add_option("--prime-bound", o.prime_bound, "Check primes p below this bound");
  sub->add_option("--terms", o.terms, "Number of series terms (cap for adaptive sums)");
  sub->add_option("--prec-bits", o.prec_bits, "Working precision in bits (>= 64)");
  sub->add_option("--x", o.x, "Evaluation point as an exact rational p/q");
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--output", o.output, "Write the report to this path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact and high-precision checks of the S_n / T_n binomial sequences", "trigverify"};
  app.require_subcommand(1);

  auto* seq = app.add_subcommand("seq", "Tabulate S_n and T_n");
  auto* verify = app.add_subcommand("verify", "Divisibility, integrality and congruence sweeps");
  verify->add_option("suite", o.suite, "Sub-suite")
      ->check(CLI::IsMember({"all", "divisibility", "congruences", "integrality", "guo", "lemma32"}));
  auto* ser = app.add_subcommand("series", "Coefficient identities of the trigonometric series");
  auto* eval = app.add_subcommand("eval", "High-precision analytic identities");
  eval->add_option("target", o.target, "What to evaluate")
      ->required()
      ->check(CLI::IsMember({"gf", "sum13", "sum14", "conjecture", "prop", "integral", "fvalue"}));
  eval->add_option("--t", o.t, "Parameter t (prop)");
  eval->add_option("--a", o.a, "Parameter a (integral)");
  eval->add_option("--b", o.b, "Parameter b (integral)");
  auto* radius = app.add_subcommand("radius", "Root test and Stirling error checks");
  auto* oeis = app.add_subcommand("oeis", "Cross-check an OEIS b-file");
  oeis->add_option("--file", o.file, "b-file path")->required();
  oeis->add_option("--generator", o.generator, "S, T, central-binomial, C(3n,n), C(6n,3n)");
  auto* report = app.add_subcommand("report", "Run every check");
  report->add_option("--fixtures", o.fixtures, "Directory with the b-file fixtures");
  for (auto* sub : {seq, verify, ser, eval, radius, oeis, report}) add_common(sub, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kExitUsage;
  }

  try {
    if (seq->parsed()) {
      const unsigned long max_n = o.max_n.value_or(8);
      std::string text;
      try {
        text = render_seq(exact_seq::sequence_table(0, max_n), o.format);
      } catch (const NonInteger& e) {
        err << "claim failure: " << e.what() << '\n';
        return kExitClaimFailure;
      }
      emit(text, o, out);
      return kExitPass;
    }
    VerificationReport r("none");
    if (verify->parsed()) r = run_verify(o);
    else if (ser->parsed()) r = run_series(o);
    else if (eval->parsed()) r = run_eval(o);
    else if (radius->parsed()) r = run_radius(o);
    else if (oeis->parsed()) r = run_oeis(o);
    else r = run_report(o);
    emit(render(r, o.format), o, out);
    return r.exit_code();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace trigverify::cli
