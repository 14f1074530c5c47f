// elat: exact lattice counts, the explicit bound, verification suites and sweeps.
//
// Exit status: 0 success, 1 an inequality was violated, 2 usage or parse
// error, 3 point budget exceeded.

#include "elat/bound.hpp"
#include "elat/count.hpp"
#include "elat/fourier.hpp"
#include "elat/record.hpp"
#include "elat/smoothing.hpp"
#include "elat/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

enum Exit : int { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::vector<std::string> a{"1"};
  std::vector<std::string> x{"1"};
  std::string format = "csv";
  std::string out;
  std::string suite;
  std::string u;
  std::string zcut = "10";
  std::uint64_t limit = 0;
  std::uint64_t budget = elat::kDefaultBudget;
  unsigned precision = elat::kDefaultDigits;
  unsigned threads = 0;
  bool timing = false;
};

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

elat::EllipsoidParams single_params(const Options& o) {
  if (o.a.size() != 1 || o.x.size() != 1) {
    throw elat::ParseError("this command takes exactly one --a and one --x");
  }
  return elat::EllipsoidParams::parse(o.a.front(), o.x.front());
}

int cmd_record(const Options& o, bool with_count, bool with_bound) {
  const auto p = single_params(o);
  const auto format = elat::record::parse_format(o.format);
  elat::record::RecordOptions ro;
  ro.with_count = with_count;
  ro.with_bound = with_bound;
  ro.threads = o.threads;
  ro.budget = o.budget;
  ro.timing = o.timing;
  const auto rec = elat::record::make_record(p, ro);
  if (with_count && rec.n_count == elat::record::kBudgetExceeded) {
    std::cerr << "error: counting exceeds the budget of " << o.budget << " disc rows\n";
    return kBudget;
  }
  Sink sink(o.out);
  elat::record::write(sink.stream(), {rec}, format);
  return rec.holds == "false" ? kViolation : kOk;
}

int cmd_verify(const Options& o) {
  const auto report = elat::verify::run_suite(o.suite, o.limit, o.budget);
  Sink sink(o.out);
  report.print(sink.stream());
  return report.passed() ? kOk : kViolation;
}

int cmd_sweep(const Options& o) {
  elat::record::SweepSpec spec;
  for (const auto& a : o.a) spec.a_values.push_back(elat::parse_rational(a));
  for (const auto& x : o.x) spec.x_values.push_back(elat::parse_rational(x));
  for (const auto* list : {&spec.a_values, &spec.x_values}) {
    for (const auto& v : *list) {
      if (v <= 0) throw elat::DomainError("sweep values must be positive");
    }
  }
  spec.budget = o.budget;
  spec.precision = o.precision;
  spec.output_path = o.out;
  spec.format = elat::record::parse_format(o.format);
  spec.threads = o.threads;
  spec.timing = o.timing;
  const auto rows = elat::record::run_sweep(spec);
  Sink sink(o.out);
  elat::record::write(sink.stream(), rows, spec.format);
  const bool violated =
      std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.holds == "false"; });
  return violated ? kViolation : kOk;
}

// Brackets P(x) through the sandwich A(x) <= u^-2 D(A; +u), A(x) >= u^-2 D(A; -u)
// with D(A) = D(V) + D(P) and D(P) enclosed by the truncated Poisson band.
int cmd_estimate(const Options& o) {
  using elat::Rational;
  using elat::Real;
  const auto p = single_params(o);
  const auto format = elat::record::parse_format(o.format);
  Rational u;
  if (!o.u.empty()) {
    u = elat::parse_rational(o.u);
  } else if (p.precond_27()) {
    elat::Integer y_floor;
    mpfr_get_z(y_floor.get_mpz_t(), elat::smoothing_y(p).backend().data(), MPFR_RNDD);
    u = Rational(y_floor);
  } else {
    u = p.x / 10;
  }
  const Rational zcut = elat::parse_rational(o.zcut);
  const Real x = elat::to_real(p.x);
  const Real ur = elat::to_real(u);
  const Real v = elat::count::volume(x);

  const auto plus = elat::fourier::poisson_d2_partial(p, u, 1, zcut, o.budget);
  const auto minus = elat::fourier::poisson_d2_partial(p, u, -1, zcut, o.budget);
  const Real upper = (elat::smoothing::d2_volume(x, ur, 1) + plus.upper()) / (ur * ur) - v;
  const Real lower = (elat::smoothing::d2_volume(x, ur, -1) + minus.lower()) / (ur * ur) - v;

  std::optional<Real> exact;
  try {
    exact = elat::count::discrepancy(p, {o.threads, o.budget}).p_value;
  } catch (const elat::BudgetExceeded&) {
  }

  const unsigned digits = elat::working_digits();
  const std::vector<std::pair<std::string, std::string>> fields{
      {"a", elat::to_string(p.a)},
      {"x", elat::to_string(p.x)},
      {"u", elat::to_string(u)},
      {"zcut", elat::to_string(zcut)},
      {"p_lower", elat::format_real(lower, digits)},
      {"p_upper", elat::format_real(upper, digits)},
      {"p_exact", exact ? elat::format_real(*exact, digits) : std::string()},
  };
  Sink sink(o.out);
  auto& os = sink.stream();
  if (format == elat::record::Format::csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].first;
    os << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].second;
    os << '\n';
  } else {
    os << "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i) {
      os << "  \"" << fields[i].first << "\": ";
      if (fields[i].second.empty()) {
        os << "null";
      } else {
        os << '"' << fields[i].second << '"';
      }
      os << (i + 1 < fields.size() ? ",\n" : "\n");
    }
    os << "}\n";
  }
  const bool inside = !exact || (lower <= *exact && *exact <= upper);
  return inside ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact lattice points in rotational ellipsoids and explicit discrepancy bounds"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  const auto add_params = [&](CLI::App* sub, bool multi) {
    if (multi) {
      sub->add_option("--a", o.a, "Ellipsoid parameter(s) a, integer or p/q")->delimiter(',');
      sub->add_option("--x", o.x, "Dilation(s) x, integer or p/q")->delimiter(',');
    } else {
      sub->add_option("--a", o.a, "Ellipsoid parameter a, integer or p/q")->expected(1);
      sub->add_option("--x", o.x, "Dilation x, integer or p/q")->expected(1);
    }
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Work budget (disc rows / lattice points)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--precision", o.precision, "Significant decimal digits")
        ->check(CLI::Range(15u, 10000u));
    sub->add_option("--threads", o.threads, "Worker threads (0: all cores)");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Output file (default stdout)");
    sub->add_flag("--timing", o.timing, "Fill wall_time_ms (makes output nondeterministic)");
  };

  auto* count = app.add_subcommand("count", "Exact lattice count and discrepancy");
  add_params(count, false);
  add_common(count);
  auto* bnd = app.add_subcommand("bound", "Explicit bound with its term breakdown");
  add_params(bnd, false);
  add_common(bnd);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "lemma1 | lemma2 | series | fourier | smoothing | vdc")
      ->required();
  verify->add_option("--limit", o.limit, "Suite range limit (0: suite default)");
  add_common(verify);
  auto* sweep = app.add_subcommand("sweep", "Grid of (a, x) records, a-major");
  add_params(sweep, true);
  add_common(sweep);
  auto* estimate = app.add_subcommand("estimate", "Poisson-sandwich bracket for P(x)");
  add_params(estimate, false);
  add_common(estimate);
  estimate->add_option("--u", o.u, "Smoothing length (default floor(y), or x/10)");
  estimate->add_option("--zcut", o.zcut, "Poisson truncation Z");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const elat::ScopedPrecision precision(o.precision);
    if (*count) return cmd_record(o, true, false);
    if (*bnd) return cmd_record(o, false, true);
    if (*verify) return cmd_verify(o);
    if (*sweep) return cmd_sweep(o);
    if (*estimate) return cmd_estimate(o);
  } catch (const elat::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const elat::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const elat::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const elat::verify::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
