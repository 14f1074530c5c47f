// Acceptance run: one PASS/FAIL line per criterion, with its timing and the
// figure that decided it. Exit status is the number of failed criteria.
//
// argv[1], when given, is the elat executable used for the determinism check.

#include "elat/arith.hpp"
#include "elat/bound.hpp"
#include "elat/count.hpp"
#include "elat/crosscheck.hpp"
#include "elat/fourier.hpp"
#include "elat/record.hpp"
#include "elat/smoothing.hpp"
#include "elat/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace elat;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool ok = o.passed && in_time;
  if (!ok) ++failures;
  std::ostringstream line;
  line << "AC" << id << ' ' << (ok ? "PASS" : "FAIL") << " [" << secs << " s";
  if (limit_s > 0) line << " / limit " << limit_s << " s";
  line << "] " << o.detail;
  if (!in_time) line << " (over time limit)";
  std::cout << line.str() << std::endl;
}

// Checks of a report whose names contain any of `keys`; cases are summed.
Outcome select(const verify::Report& r, const std::vector<std::string>& keys,
               std::uint64_t min_cases = 0) {
  Outcome o{true, ""};
  for (const auto& c : r.checks) {
    bool hit = false;
    for (const auto& k : keys) hit = hit || c.name.find(k) != std::string::npos;
    if (!hit) continue;
    o.passed = o.passed && c.passed && c.cases >= min_cases;
    o.detail += "{" + c.name + ": " + (c.passed ? "ok" : "FAIL") + ", cases " +
                std::to_string(c.cases) + ", tightest " + c.witness + "} ";
  }
  if (o.detail.empty()) return {false, "no matching checks"};
  return o;
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, 1.0, [] {
    Rational best1 = 0;
    for (int n = 1; n <= 29; ++n) best1 = std::max(best1, Rational(Rational(Integer(arith::big_r1(Rational(n)))) / n));
    Rational best12 = 0;
    for (int n = 2; n <= 90; ++n) {
      const Rational x = Rational(n) / 2;
      best12 = std::max(best12, Rational(Rational(Integer(arith::big_r12(x))) / x));
    }
    return Outcome{best1 == 4 && best12 == Rational(24, 5),
                   "max R1(n)/n = " + to_string(best1) + ", max R12(x)/x = " + to_string(best12)};
  });

  criterion(2, 60.0, [] {
    return select(verify::lemma1(100'000), {"R1(x) <= 4x", "R12(x) <= 4.8x", "r(n)^2", "R2(x)"});
  });

  verify::Report lemma2;
  criterion(3, 60.0, [&] {
    lemma2 = verify::lemma2(10'000);
    Outcome o = select(lemma2, {"R3*"});
    const Integer fast = arith::r3_star(Rational(1));
    const std::uint64_t brute = crosscheck::brute_r3_star(Rational(1));
    o.passed = o.passed && fast == 14 && brute == 14;
    o.detail += "R3*(1) = " + fast.get_str() + " (brute force " + std::to_string(brute) + ")";
    return o;
  });

  criterion(4, 0, [&] { return select(lemma2, {"g*-sum", "sum_{g*"}); });

  criterion(5, 10.0, [] {
    Outcome o{true, ""};
    for (const auto& c : bound::series_constants()) {
      o.passed = o.passed && c.certified() && c.certified_upper < c.claimed;
      o.detail += c.name + " < " + format_real(c.claimed, 4) + " slack " + format_real(c.slack, 4) + "; ";
    }
    return o;
  });

  criterion(6, 0, [] {
    const auto search = smoothing::phi_third_derivative_max_search();
    const Real c = smoothing::volume_smoothing_constant();
    const bool agree = abs(search.value - smoothing::phi_third_derivative_max()) < pow(Real(10), -30);
    return Outcome{agree && c <= Real("8.4"),
                   "M3 = " + format_real(search.value, 25) + ", (8 pi/315) M3 = " + format_real(c, 12)};
  });

  criterion(7, 0, [] {
    return select(verify::fourier(), {"ball quadrature", "cylinder/Bessel", "twice-iterated"}, 12);
  });

  criterion(8, 0, [] {
    std::uint64_t cases = 0;
    for (const Rational& a : {Rational(1, 2), Rational(1), Rational(2)}) {
      for (int x : {50, 100, 500}) {
        const EllipsoidParams p(a, Rational(x));
        const Rational count(count::lattice_count(p));
        for (int div : {10, 3}) {
          const Rational u = Rational(x) / div;
          const Rational upper = smoothing::d2_count_exact(p, u, 1) / (u * u);
          const Rational lower = smoothing::d2_count_exact(p, u, -1) / (u * u);
          if (!(lower <= count && count <= upper)) {
            return Outcome{false, "violated at a=" + to_string(a) + " x=" + std::to_string(x) +
                                      " u=" + to_string(u)};
          }
          ++cases;
        }
      }
    }
    return Outcome{true, std::to_string(cases) + " cells, exact rational comparison"};
  });

  criterion(9, 0, [] {
    const EllipsoidParams p(Rational(1), Rational(100));
    const Rational u(5);
    Outcome o{true, ""};
    for (int sign : {1, -1}) {
      const Real exact = to_real(smoothing::d2_count_exact(p, u, sign)) -
                         smoothing::d2_volume(to_real(p.x), to_real(u), sign);
      Real prev_width = -1;
      o.detail += (sign > 0 ? "+u:" : "-u:");
      for (int z : {5, 10, 20, 40}) {
        const auto band = fourier::poisson_d2_partial(p, u, sign, Rational(z));
        const bool inside = band.lower() <= exact && exact <= band.upper();
        const bool shrinks = prev_width < 0 || band.width() < prev_width;
        o.passed = o.passed && inside && shrinks;
        prev_width = band.width();
        o.detail += " Z=" + std::to_string(z) + " width " + format_real(band.width(), 3) +
                    (inside ? "" : " MISSES");
      }
      o.detail += "; ";
    }
    return o;
  });

  criterion(10, 0, [] {
    return select(verify::vdc(100), {"|sum e(F(n))|"}, 100);
  });

  criterion(11, 600.0, [] {
    Outcome o{true, ""};
    std::size_t cells = 0;
    std::size_t skipped = 0;
    Real min_ratio = -1;
    std::string where;
    for (const Rational& a : {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4)}) {
      for (int x : {15000, 50000, 100000, 1000000}) {
        const EllipsoidParams p(a, Rational(x));
        if (!p.precond_27()) {
          ++skipped;
          continue;
        }
        const auto c = bound::check_theorem(p);
        ++cells;
        o.passed = o.passed && c.holds.value_or(false);
        const Real ratio = c.rhs.total / max(abs(c.discrepancy->p_value), Real(1));
        if (min_ratio < 0 || ratio < min_ratio) {
          min_ratio = ratio;
          where = "a=" + to_string(a) + " x=" + std::to_string(x);
        }
      }
    }
    o.detail = std::to_string(cells) + " cells hold, " + std::to_string(skipped) +
               " outside the domain; smallest RHS/|P| = " + format_real(min_ratio, 4) + " at " + where +
               ". Soundness check only: at this scale the bound exceeds |P| by orders of magnitude,"
               " so sharpness is not tested.";
    return o;
  });

  criterion(12, 0, [&] {
    if (!cli.empty()) {
      const std::string base = "\"" + cli + "\" sweep --a 1/4,1/2,1,2,4 --x 100,15000,100000 --format csv";
      int s1 = 0;
      int s2 = 0;
      const std::string one = run_capture(base + " --threads 1", s1);
      const std::string many = run_capture(base + " --threads 8", s2);
      return Outcome{s1 == 0 && s2 == 0 && !one.empty() && one == many,
                     "elat sweep, 1 vs 8 threads: " + std::to_string(one.size()) + " bytes, " +
                         (one == many ? "identical" : "DIFFERENT")};
    }
    record::SweepSpec spec;
    spec.a_values = {Rational(1, 4), Rational(1), Rational(4)};
    spec.x_values = {Rational(100), Rational(15000), Rational(100000)};
    std::ostringstream one;
    std::ostringstream many;
    spec.threads = 1;
    record::write_csv(one, record::run_sweep(spec));
    spec.threads = 8;
    record::write_csv(many, record::run_sweep(spec));
    return Outcome{one.str() == many.str(), "library sweep, 1 vs 8 threads"};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
