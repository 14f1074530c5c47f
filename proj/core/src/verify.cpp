#include "elat/verify.hpp"

#include "elat/arith.hpp"
#include "elat/bound.hpp"
#include "elat/count.hpp"
#include "elat/crosscheck.hpp"
#include "elat/fourier.hpp"
#include "elat/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace elat::verify {

namespace {

std::string fmt(long double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string fmt(const Real& v) { return format_real(v, 12); }

// Tracks the tightest case of an inequality family, or its first failure.
class Extremum {
 public:
  explicit Extremum(std::string name) { result_.name = std::move(name); }

  void observe(bool ok, long double slack, const std::function<std::string()>& where) {
    ++result_.cases;
    if (!failed_ && !ok) {
      failed_ = true;
      result_.witness = where();
      result_.slack = fmt(slack);
      return;
    }
    if (!failed_ && slack < best_) {
      best_ = slack;
      result_.witness = where();
      result_.slack = fmt(slack);
    }
  }

  CheckResult result() const {
    CheckResult r = result_;
    r.passed = !failed_ && r.cases > 0;
    return r;
  }

 private:
  CheckResult result_;
  bool failed_ = false;
  long double best_ = std::numeric_limits<long double>::infinity();
};

CheckResult single(std::string name, bool ok, std::string witness, std::string slack) {
  return {std::move(name), ok, 1, std::move(witness), std::move(slack)};
}

std::string half_str(std::uint64_t k) {
  return k % 2 == 0 ? std::to_string(k / 2) : std::to_string(k / 2) + ".5";
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void Report::print(std::ostream& os) const {
  os << suite << ": " << (passed() ? "PASS" : "FAIL") << '\n';
  for (const CheckResult& c : checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << "  cases=" << c.cases;
    if (!c.witness.empty()) os << "  witness: " << c.witness;
    if (!c.slack.empty()) os << "  slack=" << c.slack;
    os << '\n';
  }
}

Report lemma1(std::uint64_t limit) {
  limit = std::max<std::uint64_t>(limit, 90);
  const std::uint64_t r1_limit = 10 * limit;
  const auto table = arith::shared_table(std::max(r1_limit, 2 * limit + 2));
  const auto r1 = [&](std::uint64_t n) { return table->prefix(n) - 1; };
  const auto r12 = [&](std::uint64_t lo, std::uint64_t hi) {
    return table->prefix(hi) - table->prefix(lo);
  };
  Report rep{"lemma1", {}};

  {
    Rational best = 0;
    std::string where;
    for (std::uint64_t n = 1; n <= 29; ++n) {
      const Rational ratio = Rational(Integer(r1(n))) / n;
      if (ratio > best) {
        best = ratio;
        where.clear();
      }
      if (ratio == best) where += (where.empty() ? "n=" : ",") + std::to_string(n);
    }
    rep.checks.push_back(single("max_{n<=29} R1(n)/n == 4", best == 4,
                                "max=" + to_string(best) + " at " + where,
                                to_string(Rational(4 - best))));
  }
  {
    Rational best = 0;
    std::string where;
    for (std::uint64_t n = 2; n <= 90; ++n) {
      // x = n/2: R12 = sum_{n/2 < k <= n} r(k)
      const Rational ratio = Rational(Integer(2 * r12(n / 2, n))) / n;
      if (ratio > best) {
        best = ratio;
        where.clear();
      }
      if (ratio == best) where += (where.empty() ? "n=" : ",") + std::to_string(n);
    }
    rep.checks.push_back(single("max_{2<=n<=90} R12(n/2)/(n/2) == 4.8", best == Rational(24, 5),
                                "max=" + to_string(best) + " at " + where,
                                to_string(Rational(Rational(24, 5) - best))));
  }
  {
    Extremum e("R1(x) <= 4x, x = n, n + 1/2, n <= " + std::to_string(r1_limit));
    for (std::uint64_t k = 2; k <= 2 * r1_limit + 1; ++k) {
      const std::uint64_t v = r1(k / 2);
      // 4 (k/2) - v
      const long long slack = static_cast<long long>(2 * k) - static_cast<long long>(v);
      e.observe(slack >= 0, slack, [&] { return "x=" + half_str(k) + " R1=" + std::to_string(v); });
    }
    rep.checks.push_back(e.result());
  }
  {
    Extremum e("R12(x) <= 4.8x, x = n, n + 1/2, n <= " + std::to_string(limit));
    for (std::uint64_t k = 2; k <= 2 * limit + 1; ++k) {
      const std::uint64_t v = r12(k / 2, k);  // floor(x) = k/2, floor(2x) = k
      const long long twice = 24 * static_cast<long long>(k) - 10 * static_cast<long long>(v);
      e.observe(twice >= 0, twice / 10.0L,
                [&] { return "x=" + half_str(k) + " R12=" + std::to_string(v); });
    }
    rep.checks.push_back(e.result());
  }
  {
    Extremum e("r(n)^2 <= sum_{d|n} r(d) r(n/d), n <= " + std::to_string(limit));
    const auto conv = arith::conv_table(*table, limit);
    for (std::uint64_t n = 1; n <= limit; ++n) {
      const std::uint64_t sq = std::uint64_t{(*table)[n]} * (*table)[n];
      const long double slack = static_cast<long double>(conv[n]) - static_cast<long double>(sq);
      e.observe(sq <= conv[n], slack, [&] {
        return "n=" + std::to_string(n) + " r^2=" + std::to_string(sq) +
               " conv=" + std::to_string(conv[n]);
      });
    }
    rep.checks.push_back(e.result());
  }
  {
    Extremum e("R2(x) <= 19.2 x log(2 e^2 x), x = n, n + 1/2 in [1, " + std::to_string(limit) +
               "]");
    for (std::uint64_t k = 2; k <= 2 * limit; ++k) {
      const std::uint64_t v = table->prefix_sq(k) - table->prefix_sq(k / 2);
      const long double x = k / 2.0L;
      const long double rhs = 19.2L * x * (std::log(2.0L) + 2.0L + std::log(x));
      const long double slack = rhs - static_cast<long double>(v);
      e.observe(slack >= 0, slack / rhs,
                [&] { return "x=" + half_str(k) + " R2=" + std::to_string(v) + " (relative)"; });
    }
    rep.checks.push_back(e.result());
  }
  return rep;
}

Report lemma2(std::uint64_t limit, std::uint64_t budget) {
  Report rep{"lemma2", {}};
  arith::shared_table(limit + 1);
  {
    Extremum e("R3*(x) <= 14 x^(3/2), half-integers x <= " + std::to_string(limit));
    for (std::uint64_t k = 1; k <= 2 * limit; ++k) {
      const Integer c = arith::r3_star(Rational(Integer(k)) / 2);
      // c <= 14 (k/2)^(3/2)  iff  8 c^2 <= 196 k^3
      const Integer kk(k);
      const bool ok = 8 * c * c <= 196 * kk * kk * kk;
      const long double x = k / 2.0L;
      const long double slack = 14.0L * x * std::sqrt(x) - static_cast<long double>(c.get_d());
      e.observe(ok, slack, [&] { return "x=" + half_str(k) + " R3*=" + c.get_str(); });
    }
    rep.checks.push_back(e.result());
  }
  {
    const Integer fast = arith::r3_star(Rational(1));
    const std::uint64_t brute = crosscheck::brute_r3_star(Rational(1));
    rep.checks.push_back(single("R3*(1) == 14 == 14 * 1^(3/2) (equality case)",
                                fast == 14 && brute == 14,
                                "fast=" + fast.get_str() + " brute=" + std::to_string(brute), "0"));
  }
  {
    Extremum e("R3* closed form == brute force, half-integers x <= 30");
    for (std::uint64_t k = 1; k <= 60; ++k) {
      const Rational x = Rational(Integer(k)) / 2;
      const Integer fast = arith::r3_star(x);
      const std::uint64_t brute = crosscheck::brute_r3_star(x);
      e.observe(fast == brute, 0, [&] { return "x=" + half_str(k); });
    }
    rep.checks.push_back(e.result());
  }

  const std::array<Rational, 5> as{Rational(1, 4), Rational(1, 2), Rational(1), Rational(2),
                                   Rational(4)};
  const std::array<int, 5> zs{1, 2, 5, 10, 20};
  const std::array<long double, 3> alphas{4.0L, 5.0L, 7.0L};
  Extremum inner("sum_{g*<=Z} g*^-3 <= (42/g0^3) log+(1.4 Z/g0)");
  Extremum inner_brute("g*-sum row formula == triple-loop enumeration");
  Extremum monotone("g*-sum nondecreasing in Z, zero below g0");
  Extremum tail("sum_{g*>Z} g*^-alpha <= 14 alpha/((alpha-3) g0^3) Z^(3-alpha)");
  for (const Rational& a : as) {
    const auto below = arith::gstar_sum_inner(Rational(1, 100), a, budget);
    long double previous = below.value;
    monotone.observe(below.value == 0, 0, [&] { return "a=" + to_string(a) + " Z=1/100"; });
    for (int z : zs) {
      const Rational zr(z);
      const auto sum = arith::gstar_sum_inner(zr, a, budget);
      const long double rhs = arith::gstar_inner_bound(zr, a);
      const auto where = [&] { return "a=" + to_string(a) + " Z=" + std::to_string(z); };
      inner.observe(sum.upper() <= rhs, rhs - sum.upper(), where);
      monotone.observe(sum.value >= previous, sum.value - previous, where);
      previous = sum.value;
      if (Rational(zr * zr / a) <= 100 && a * zr <= 20) {
        const long double brute = crosscheck::brute_gstar_sum(a, 3.0L, Rational(0), zr);
        const long double diff = std::fabs(brute - sum.value);
        const long double tol = 1e-12L * std::max(1.0L, brute);
        inner_brute.observe(diff <= tol, tol - diff, where);
      }
      for (long double alpha : alphas) {
        const auto cert = arith::gstar_sum_tail(zr, alpha, a, budget);
        tail.observe(cert.certified(),
                     cert.bound - cert.enumerated.upper() - cert.remainder, [&] {
                       return where() + " alpha=" + fmt(alpha) +
                              " head=" + fmt(cert.enumerated.value) +
                              " remainder=" + fmt(cert.remainder);
                     });
      }
    }
  }
  rep.checks.push_back(inner.result());
  rep.checks.push_back(inner_brute.result());
  rep.checks.push_back(monotone.result());
  rep.checks.push_back(tail.result());
  return rep;
}

Report series() {
  Report rep{"series", {}};
  for (const auto& c : bound::series_constants()) {
    std::string witness = "upper=" + fmt(c.certified_upper) + " (head " + fmt(c.head) +
                          " + tail " + fmt(c.tail) + ")";
    if (c.majorant) witness += " majorant=" + fmt(*c.majorant);
    rep.checks.push_back(
        single(c.name + " < " + fmt(c.claimed), c.certified(), witness, fmt(c.slack)));
  }
  return rep;
}

namespace {

double i_closed_double(double g, double t) {
  constexpr double pi = std::numbers::pi;
  const double w = 2 * pi * g * std::sqrt(t);
  return -std::sqrt(t) * std::cos(w) / (pi * g * g) + std::sin(w) / (2 * pi * pi * g * g * g);
}

std::vector<std::array<std::int64_t, 3>> small_indices(std::int64_t norm_sq) {
  std::vector<std::array<std::int64_t, 3>> out;
  const auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(norm_sq))) + 1;
  for (std::int64_t m1 = -b; m1 <= b; ++m1) {
    for (std::int64_t m2 = -b; m2 <= b; ++m2) {
      for (std::int64_t m3 = -b; m3 <= b; ++m3) {
        const std::int64_t n = std::max(m1 * m1 + m2 * m2, m3 * m3);
        if (n > 0 && n <= norm_sq) out.push_back({m1, m2, m3});
      }
    }
  }
  return out;
}

std::string index_str(const std::array<std::int64_t, 3>& m) {
  return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) +
         ")";
}

}  // namespace

Report fourier(std::uint64_t budget) {
  Report rep{"fourier", {}};
  const std::array<Rational, 3> as{Rational(1, 2), Rational(1), Rational(2)};
  const std::array<int, 3> ts{1, 2, 5};
  const auto indices = small_indices(4);

  Extremum ball("I closed form vs ball quadrature, |m|_* <= 2 (tol 1e-6)");
  Extremum cyl("I closed form vs cylinder/Bessel quadrature, |m|_* <= 2 (tol 1e-6)");
  Extremum twice("I2 closed form vs twice-iterated integral of I (tol 1e-6)");
  Extremum bounds("|I|, |I2| within termwise bounds");
  for (const Rational& a : as) {
    for (int t : ts) {
      const Real tr(t);
      for (const auto& m : indices) {
        const fourier::FourierIndex idx(m, a);
        const double g = static_cast<double>(idx.g);
        const double closed = static_cast<double>(fourier::i_closed(idx, tr));
        const auto where = [&] {
          return "a=" + to_string(a) + " t=" + std::to_string(t) + " m=" + index_str(m);
        };
        const double d_ball = std::fabs(closed - crosscheck::i_ball_quadrature(g, t));
        ball.observe(d_ball <= 1e-6, 1e-6 - d_ball, where);
        const double d_cyl = std::fabs(
            closed - crosscheck::i_cylinder_quadrature(m, static_cast<double>(to_real(a)), t));
        cyl.observe(d_cyl <= 1e-6, 1e-6 - d_cyl, where);

        const Real i2 = fourier::i2_closed(idx, tr);
        const double oracle =
            crosscheck::twice_iterated([g](double s) { return i_closed_double(g, s); }, t);
        const double d_twice = std::fabs(static_cast<double>(i2) - oracle);
        twice.observe(d_twice <= 1e-6, 1e-6 - d_twice, where);

        const Real s1 = fourier::i_closed_bound(idx.g, tr) - abs(fourier::i_closed(idx, tr));
        const Real s2 = fourier::i2_closed_bound(idx.g, tr) - abs(i2);
        const Real s = boost::multiprecision::min(s1, s2);
        bounds.observe(s >= 0, static_cast<long double>(s), where);
      }
    }
  }
  rep.checks.push_back(ball.result());
  rep.checks.push_back(cyl.result());
  rep.checks.push_back(twice.result());
  rep.checks.push_back(bounds.result());

  {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-50, 50);
    const std::array<Rational, 7> pool{Rational(1, 4), Rational(1, 3), Rational(1, 2), 1,
                                       Rational(3, 2), 2,               4};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    Extremum order("g >= g* >= g0 |m|_* on 1000 random indices");
    Extremum phase("f(n, m) == g((m1, m2, m)) with n = m1^2 + m2^2, 20 random triples");
    for (int i = 0; i < 1000; ++i) {
      std::array<std::int64_t, 3> m{coord(rng), coord(rng), coord(rng)};
      if (m == std::array<std::int64_t, 3>{0, 0, 0}) m[2] = 1;
      const Rational& a = pool[pick(rng)];
      const fourier::FourierIndex idx(m, a);
      const arith::CylinderNormIndex cn(m);
      const Real floor_val = arith::g0(a) * sqrt(Real(cn.norm_sq));
      const Real tol = pow(Real(10), -static_cast<int>(working_digits()) + 5) * idx.g;
      const Real s = boost::multiprecision::min(Real(idx.g - idx.g_star),
                                                Real(idx.g_star - floor_val));
      order.observe(s >= -tol, static_cast<long double>(s / idx.g),
                    [&] { return "m=" + index_str(m) + " a=" + to_string(a) + " (relative)"; });
      if (i < 20) {
        if (m[2] == 0) m[2] = 1;
        const fourier::FourierIndex j(m, a);
        const Real n(m[0] * m[0] + m[1] * m[1]);
        if (n > 0) {
          const Real diff = abs(fourier::f_phase(n, abs(Real(m[2])), a) - j.g);
          phase.observe(diff <= tol, static_cast<long double>(tol - diff),
                        [&] { return "m=" + index_str(m) + " a=" + to_string(a); });
        }
      }
    }
    rep.checks.push_back(order.result());
    rep.checks.push_back(phase.result());
  }

  {
    // a = 1, x = 100, u = 5: the certified band must contain D(A) - D(V)
    const EllipsoidParams p(Rational(1), Rational(100));
    const Rational u(5);
    Extremum contain("Poisson band contains exact D(P), a=1 x=100 u=5, Z in {5,10,20,40}");
    Extremum shrink("Poisson band width strictly decreasing in Z");
    for (int sign : {1, -1}) {
      const Real exact = to_real(smoothing::d2_count_exact(p, u, sign, budget)) -
                         smoothing::d2_volume(to_real(p.x), to_real(u), sign);
      Real previous_width = -1;
      for (int z : {5, 10, 20, 40}) {
        const auto band = fourier::poisson_d2_partial(p, u, sign, Rational(z), budget);
        const Real room = boost::multiprecision::min(Real(exact - band.lower()),
                                                     Real(band.upper() - exact));
        const auto where = [&] {
          return "sign=" + std::to_string(sign) + " Z=" + std::to_string(z) +
                 " exact=" + fmt(exact) + " partial=" + fmt(band.partial) +
                 " tail=" + fmt(band.tail);
        };
        contain.observe(room >= 0, static_cast<long double>(room), where);
        if (previous_width >= 0) {
          const Real drop = previous_width - band.width();
          shrink.observe(drop > 0, static_cast<long double>(drop), where);
        }
        previous_width = band.width();
      }
    }
    rep.checks.push_back(contain.result());
    rep.checks.push_back(shrink.result());
  }
  return rep;
}

Report smoothing(std::uint64_t budget) {
  Report rep{"smoothing", {}};
  namespace sm = smoothing;
  {
    const auto search = sm::phi_third_derivative_max_search();
    const Real stored = sm::phi_third_derivative_max();
    const Real diff = abs(search.value - stored);
    const bool ok = diff <= pow(Real(10), -30) && search.monotone &&
                    abs(search.argmax - Real(1) / 3) <= pow(Real(10), -30);
    rep.checks.push_back(single("max |phi'''| on [-1/3, 1/3] (grid search == stored M3)", ok,
                                "M3=" + fmt(search.value) + " at v=" + fmt(search.argmax) +
                                    (search.monotone ? " phi''''>0" : " phi'''' sign change"),
                                fmt(Real(-diff))));
  }
  {
    const Real c = sm::volume_smoothing_constant();
    rep.checks.push_back(single("(8 pi / 315) M3 <= 8.4", c <= Real("8.4"), "value=" + fmt(c),
                                fmt(Real(Real("8.4") - c))));
  }
  {
    Extremum e("|phi(w) - 35 w^2/4| <= |w|^3 M3 / 6 on 601 points of [-1/3, 1/3]");
    for (int i = -300; i <= 300; ++i) {
      const Real w = Real(i) / 900;
      const auto d = sm::phi_taylor_defect(w);
      e.observe(d.holds(), static_cast<long double>(d.bound - d.defect),
                [&] { return "w=" + std::to_string(i) + "/900"; });
    }
    rep.checks.push_back(e.result());
  }
  {
    Extremum e("|u^-2 D(V) - V(x)| <= 8.4 x^(1/2) |u|");
    for (int x : {1, 10, 100, 1000, 15000}) {
      for (int div : {10, 5, 3}) {
        for (int sign : {1, -1}) {
          const Real xr(x);
          const Real u = xr / div;
          const Real lhs = abs(sm::d2_volume(xr, u, sign) / (u * u) - count::volume(xr));
          const Real rhs = Real("8.4") * sqrt(xr) * u;
          e.observe(lhs <= rhs, static_cast<long double>((rhs - lhs) / rhs), [&] {
            return "x=" + std::to_string(x) + " u=x/" + std::to_string(div) +
                   " sign=" + std::to_string(sign) + " (relative)";
          });
        }
      }
    }
    rep.checks.push_back(e.result());
  }
  {
    Extremum e("double-integral form == second difference of F_[2], F in {1, t, t^(3/2)}");
    struct Case {
      const char* name;
      std::function<double(double)> f;
      std::function<double(double)> f2;
    };
    const std::array<Case, 3> cases{
        Case{"1", [](double) { return 1.0; }, [](double t) { return t * t / 2; }},
        Case{"t", [](double t) { return t; }, [](double t) { return t * t * t / 6; }},
        Case{"t^(3/2)", [](double t) { return t * std::sqrt(t); },
             [](double t) { return 4 * t * t * t * std::sqrt(t) / 35; }}};
    for (const Case& c : cases) {
      for (double x : {1.0, 2.0, 10.0}) {
        for (double u : {x / 10, x / 3, -x / 3}) {
          const double quad = sm::d2_generic(c.f, x, u);
          const double closed = sm::d2_from_primitive(c.f2, x, u);
          const double diff = std::fabs(quad - closed);
          e.observe(diff <= 1e-9, 1e-9 - diff, [&] {
            return std::string("F=") + c.name + " x=" + fmt(x) + " u=" + fmt(u);
          });
        }
      }
    }
    rep.checks.push_back(e.result());
  }
  {
    Extremum e("exact D(A) == quadrature over brute-force step function, a=1 x=1 u=1/4");
    const EllipsoidParams p(Rational(1), Rational(1));
    const Rational u(1, 4);
    const auto steps = crosscheck::counting_steps(p.a, Rational(3, 2));
    std::vector<double> cuts;
    for (const auto& s : steps) cuts.push_back(s.first.get_d());
    const auto a_fn = [&](double t) {
      return static_cast<double>(crosscheck::counting_function(steps, t));
    };
    for (int sign : {1, -1}) {
      const double exact = sm::d2_count_exact(p, u, sign, budget).get_d();
      const double quad = sm::d2_generic(a_fn, 1.0, sign * 0.25, cuts);
      const double diff = std::fabs(exact - quad);
      e.observe(diff <= 1e-8, 1e-8 - diff, [&] {
        return "sign=" + std::to_string(sign) + " exact=" + fmt(exact) + " quad=" + fmt(quad);
      });
    }
    rep.checks.push_back(e.result());
  }
  {
    Extremum e("sandwich u^-2 D(A; -u) <= A(x) <= u^-2 D(A; +u), a in {1/2,1,2}, "
               "x in {10,50,100,500}, u in {x/10,x/5,x/3}");
    for (const Rational& a : {Rational(1, 2), Rational(1), Rational(2)}) {
      for (int x : {10, 50, 100, 500}) {
        const EllipsoidParams p(a, Rational(x));
        const Rational count(count::lattice_count(p, {0, budget}));
        for (int div : {10, 5, 3}) {
          const Rational u = Rational(x) / div;
          const Rational upper = sm::d2_count_exact(p, u, 1, budget) / (u * u);
          const Rational lower = sm::d2_count_exact(p, u, -1, budget) / (u * u);
          const bool ok = lower <= count && count <= upper;
          const Rational room = std::min(Rational(upper - count), Rational(count - lower));
          e.observe(ok, static_cast<long double>(room.get_d()), [&] {
            return "a=" + to_string(a) + " x=" + std::to_string(x) + " u=" + to_string(u) +
                   " A=" + count.get_str();
          });
        }
      }
    }
    rep.checks.push_back(e.result());
  }
  return rep;
}

Report vdc(std::uint64_t draws, std::uint64_t seed) {
  Report rep{"vdc", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::array<Rational, 9> pool{Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                     Rational(2, 3), Rational(1),    Rational(3, 2),
                                     Rational(2),    Rational(3),    Rational(4)};
  const auto uniform_int = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };

  Extremum test("|sum e(F(n))| <= 40 (U-N) sqrt(L) + 11/sqrt(L) on random restricted draws");
  Extremum contain("F'' in [L (1 - 1e-9), 8L (1 + 1e-9)] at sampled tau");
  Extremum fd("F'' closed form == central second difference (rel 1e-8)");
  Extremum integral("F'' closed form == integral representation (rel 1e-9)");
  for (std::uint64_t i = 0; i < draws; ++i) {
    fourier::ExpSumSpec spec;
    spec.a = pool[uniform_int(0, pool.size() - 1)];
    spec.n_low = Real(10 + 390 * unit(rng));
    const auto n_first = static_cast<std::int64_t>(ceil(spec.n_low));
    spec.u = uniform_int(n_first, static_cast<std::int64_t>(floor(2 * spec.n_low)));
    spec.m_low = Real(30 + 120 * unit(rng));
    spec.w = static_cast<std::int64_t>(floor(sqrt(Real(2)) * spec.m_low));
    spec.h_max = uniform_int(10, static_cast<std::int64_t>(floor(spec.m_low / 2)));
    spec.t = pow(Real(10), Real(2 + 6 * unit(rng)));
    const auto m_first = static_cast<std::int64_t>(ceil(spec.m_low));
    const std::int64_t h = uniform_int(1, std::min(spec.h_max, spec.w - m_first));
    const std::int64_t m = uniform_int(m_first, spec.w - h);
    const auto where = [&] {
      return "draw=" + std::to_string(i) + " a=" + to_string(spec.a) + " N=" + fmt(spec.n_low) +
             " U=" + std::to_string(spec.u) + " M=" + fmt(spec.m_low) + " h=" +
             std::to_string(h) + " m=" + std::to_string(m) + " t=" + fmt(spec.t);
    };
    if (!spec.restricted()) {
      test.observe(false, 0, [&] { return "unrestricted draw " + where(); });
      continue;
    }
    const auto check = fourier::vdc_check(spec, h, m);
    test.observe(check.holds(),
                 static_cast<long double>((check.rhs - Real(check.lhs)) / check.rhs),
                 [&] { return where() + " (relative)"; });

    const auto lb = fourier::lambda_bounds(h, spec.n_low, spec.m_low, spec.t, spec.a);
    const Real lo = lb.lambda * (1 - Real("1e-9"));
    const Real hi = lb.upper * (1 + Real("1e-9"));
    for (int k = 0; k < 5; ++k) {
      const Real tau = spec.n_low * (1 + Real(unit(rng)));
      const Real f2 =
          fourier::weyl_phase_second_derivative(tau, Real(m), h, spec.t, spec.a);
      const Real room = boost::multiprecision::min(Real((f2 - lo) / lb.lambda),
                                                   Real((hi - f2) / lb.lambda));
      contain.observe(f2 >= lo && f2 <= hi, static_cast<long double>(room),
                      [&] { return where() + " tau=" + fmt(tau) + " (units of L)"; });

      const Real diff_fd = crosscheck::weyl_phase_second_difference(
          tau, Real(m), h, spec.t, spec.a, tau * Real("1e-12"));
      const Real rel_fd = abs(diff_fd - f2) / f2;
      fd.observe(rel_fd <= Real("1e-8"), static_cast<long double>(Real("1e-8") - rel_fd),
                 [&] { return where() + " tau=" + fmt(tau); });

      const double via_integral = fourier::weyl_phase_second_derivative_integral(
          static_cast<double>(tau), static_cast<double>(m), h, static_cast<double>(spec.t),
          static_cast<double>(to_real(spec.a)));
      const double rel_int = std::fabs(via_integral / static_cast<double>(f2) - 1.0);
      integral.observe(rel_int <= 1e-9, 1e-9 - rel_int,
                       [&] { return where() + " tau=" + fmt(tau); });
    }
  }
  rep.checks.push_back(test.result());
  rep.checks.push_back(contain.result());
  rep.checks.push_back(fd.result());
  rep.checks.push_back(integral.result());

  {
    Extremum e("|S^[j](N,M)| <= 4 f(N,M)^-j sup|E_{N,M}|, j in {2, 4}, 20 draws");
    for (int i = 0; i < 20; ++i) {
      const Rational a = pool[uniform_int(0, pool.size() - 1)];
      const Real n_low(10 + 30 * unit(rng));
      const Real m_low(10 + 20 * unit(rng));
      const Real t = pow(Real(10), Real(2 + 4 * unit(rng)));
      const int j = i % 2 == 0 ? 2 : 4;
      const auto c = fourier::partial_summation_check(n_low, m_low, j, t, a);
      e.observe(c.holds(), static_cast<long double>((c.bound - Real(c.s_abs)) / c.bound), [&] {
        return "a=" + to_string(a) + " N=" + fmt(n_low) + " M=" + fmt(m_low) +
               " j=" + std::to_string(j) + " (relative)";
      });
    }
    rep.checks.push_back(e.result());
  }
  return rep;
}

Report run_suite(std::string_view name, std::uint64_t limit, std::uint64_t budget) {
  if (name == "lemma1") return lemma1(limit ? limit : 100'000);
  if (name == "lemma2") return lemma2(limit ? limit : 10'000, budget);
  if (name == "series") return series();
  if (name == "fourier") return fourier(budget);
  if (name == "smoothing") return smoothing(budget);
  if (name == "vdc") return vdc(limit ? limit : 100);
  throw UnknownSuite("unknown verification suite: " + std::string(name));
}

}  // namespace elat::verify
