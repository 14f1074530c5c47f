#include "elat/bound.hpp"

#include <algorithm>
#include <map>

namespace elat::bound {

YZ params_yz(const EllipsoidParams& p) {
  YZ out;
  out.y = smoothing_y(p);
  out.z = poisson_cut_z(p);
  out.precond_27 = out.y >= 1 && 3 * out.y <= to_real(p.x);
  out.precond_28 = p.precond_28();
  return out;
}

BoundBreakdown theorem_rhs(const EllipsoidParams& p) {
  const Real a = to_real(p.a);
  const Real x = to_real(p.x);
  const YZ yz = params_yz(p);
  BoundBreakdown b;
  b.l_factor = l_factor(a, x);
  b.y = yz.y;
  b.z = yz.z;
  b.precond_27 = yz.precond_27;
  b.precond_28 = yz.precond_28;
  b.alpha0 = boost::multiprecision::max(a, Real(1 / sqrt(a)));
  b.g0 = 1 / b.alpha0;

  const Real& l = b.l_factor;
  const auto pw = [](const Real& base, int num, int den) { return pow(base, Real(num) / den); };
  const Real a03 = b.alpha0 * b.alpha0 * b.alpha0;
  const Real l52 = pw(l, 5, 2);

  b.terms[0] = 1237 * pw(a, 1, 8) * pw(x, 11, 16) * pw(l, 3, 8);
  b.terms[1] = 12 * pw(a, -69, 64) * pw(x, 81, 128) * pw(l, 145, 64);
  b.terms[2] = (pw(a, 1, 4) * (134 * l52 + 543 * pw(l, 1, 4)) + 20 * l52 / pw(a, 1, 4)) *
               pw(x, 5, 8);
  b.terms[3] = 12 * pw(a, -39, 64) * pw(x, 75, 128) * pw(l, 139, 64);
  b.terms[4] = (268 * l / a + 159 * a03 + 2000) * sqrt(x);
  b.terms[5] = a03 * (Real("4.4") * l + Real("104.5"));

  b.total = 0;
  for (const Real& t : b.terms) b.total += t;
  return b;
}

TheoremCheck check_theorem(const EllipsoidParams& p, const count::CountOptions& options) {
  TheoremCheck out;
  out.rhs = theorem_rhs(p);
  out.margin = 0;
  if (!out.rhs.valid()) return out;
  out.discrepancy = count::discrepancy(p, options);
  out.margin = out.rhs.total - abs(out.discrepancy->p_value);
  out.holds = out.margin >= 0;
  return out;
}

namespace {

// Exponents in twelfths: summand 2^(-p r - q s) (2^-r + 2^-s)^-e.
struct SeriesShape {
  int p;
  int q;
  int e;
};

class PowerCache {
 public:
  explicit PowerCache(int e) : e_(e) {
    for (int j = 0; j < 12; ++j) root_[j] = pow(Real(2), Real(j) / 12);
  }

  /// 2^(k/12)
  Real two_pow(long k) const {
    const long whole = k >= 0 ? k / 12 : -((-k + 11) / 12);
    const long rest = k - 12 * whole;
    return ldexp(root_[rest], static_cast<int>(whole));
  }

  /// (1 + 2^-d)^(-e/12), d >= 0
  const Real& mix(int d) {
    auto it = mix_.find(d);
    if (it == mix_.end()) {
      it = mix_.emplace(d, pow(1 + ldexp(Real(1), -d), Real(-e_) / 12)).first;
    }
    return it->second;
  }

 private:
  int e_;
  std::array<Real, 12> root_;
  std::map<int, Real> mix_;
};

Real summand(PowerCache& cache, const SeriesShape& f, long r, long s) {
  const long m = std::min(r, s);
  const int d = static_cast<int>(r > s ? r - s : s - r);
  return cache.two_pow(-f.p * r - f.q * s + f.e * m) * cache.mix(d);
}

struct Head {
  Real sum;
  std::uint64_t terms = 0;
};

Head box_sum(const SeriesShape& f, long r_lo, long r_hi, long s_lo, long s_hi) {
  PowerCache cache(f.e);
  Head h;
  h.sum = 0;
  for (long r = r_lo; r <= r_hi; ++r) {
    for (long s = s_lo; s <= s_hi; ++s) {
      h.sum += summand(cache, f, r, s);
      ++h.terms;
    }
  }
  return h;
}

Real two(const Real& exponent) { return pow(Real(2), exponent); }

/// sum_{k >= lo} 2^(-c k), c > 0
Real geo_from(const Real& c, long lo) { return two(-c * lo) / (1 - two(-c)); }

/// sum_{lo <= k <= hi} 2^(-c k)
Real geo_range(const Real& c, long lo, long hi) {
  return geo_from(c, lo) - geo_from(c, hi + 1);
}

Real rounding_allowance(const Head& h) {
  return h.sum * (h.terms + 16) * pow(Real(10), -static_cast<int>(working_digits()) + 4);
}

SeriesCertificate finish(std::string name, const char* claimed, const Head& head,
                         const Real& tail, std::optional<Real> majorant) {
  SeriesCertificate c;
  c.name = std::move(name);
  c.claimed = Real(claimed);
  c.head = head.sum;
  c.tail = tail;
  c.rounding = rounding_allowance(head);
  c.certified_upper = c.head + c.tail + c.rounding;
  c.majorant = std::move(majorant);
  Real worst = c.certified_upper;
  if (c.majorant) worst = boost::multiprecision::max(worst, *c.majorant);
  c.slack = c.claimed - worst;
  return c;
}

SeriesCertificate full_series(const char* name, const char* claimed, const SeriesShape& f,
                              int cut) {
  const Head head = box_sum(f, 0, cut, 0, cut);
  const Real p = Real(f.p) / 12;
  const Real q = Real(f.q) / 12;
  const Real e = Real(f.e) / 12;
  // r > cut, s <= r: (2^-r + 2^-s)^-e <= 2^(e s)
  const Real c = e - q;
  const Real tail_a = two(c) / (two(c) - 1) * geo_from(p - c, cut + 1);
  // s > cut, r < s: (2^-r + 2^-s)^-e <= 2^(e r)
  const Real d = e - p;
  const Real tail_b = geo_from(q - d, cut + 1) / (two(d) - 1);
  return finish(name, claimed, head, tail_a + tail_b, std::nullopt);
}

// The three pieces of min(r, s) <= 0 with their printed geometric majorants:
//   r, s <= 0:        2^-e 2^((e/2 - p) r + (e/2 - q) s)
//   r > 0, s <= 0:    2^(-p r) 2^((e - q) s)
//   r <= 0, s > 0:    2^((e - p) r) 2^(-q s)
std::array<SeriesCertificate, 3> region_sums(const SeriesShape& f,
                                             const std::array<const char*, 3>& claimed,
                                             const char* label, int cut) {
  const Real p = Real(f.p) / 12;
  const Real q = Real(f.q) / 12;
  const Real e = Real(f.e) / 12;
  const long k = cut;

  // factor sums over r <= 0 written as sum_{k >= 0} 2^(-c k) with k = -r
  const Real c1 = e / 2 - p;
  const Real c2 = e / 2 - q;
  const Real lead = two(-e);
  const Real maj_nn = lead * geo_from(c1, 0) * geo_from(c2, 0);
  const Real box_nn = lead * geo_range(c1, 0, k) * geo_range(c2, 0, k);

  const Real maj_pn = geo_from(p, 1) * geo_from(e - q, 0);
  const Real box_pn = geo_range(p, 1, k) * geo_range(e - q, 0, k);

  const Real maj_np = geo_from(e - p, 0) * geo_from(q, 1);
  const Real box_np = geo_range(e - p, 0, k) * geo_range(q, 1, k);

  const std::string base(label);
  return {
      finish(base + " r,s<=0", claimed[0], box_sum(f, -k, 0, -k, 0), maj_nn - box_nn, maj_nn),
      finish(base + " r>0,s<=0", claimed[1], box_sum(f, 1, k, -k, 0), maj_pn - box_pn, maj_pn),
      finish(base + " r<=0,s>0", claimed[2], box_sum(f, -k, 0, 1, k), maj_np - box_np, maj_np),
  };
}

}  // namespace

std::vector<SeriesCertificate> series_constants(int cut) {
  if (cut < 1) throw DomainError("series truncation must be >= 1");
  std::vector<SeriesCertificate> out;
  out.push_back(full_series("sum 2^(-r-7s/12)/(2^-r+2^-s)^(17/12)", "23.8", {12, 7, 17}, cut));
  out.push_back(full_series("sum 2^(-r/2-5s/12)/(2^-r+2^-s)^(7/12)", "27", {6, 5, 7}, cut));
  for (auto& c : region_sums({12, 7, 29}, {"4", "1.4", "3.3"}, "e=29/12", cut)) {
    out.push_back(std::move(c));
  }
  for (auto& c : region_sums({6, 5, 19}, {"8", "4.4", "5.7"}, "e=19/12", cut)) {
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace elat::bound
