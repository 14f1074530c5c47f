#include "elat/count.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace elat::count {

std::uint64_t disc_count(std::uint64_t n) {
  // walk the boundary: v shrinks monotonically as u grows
  std::uint64_t v = isqrt_u64(n);
  const std::uint64_t s = v;
  std::uint64_t quarter = 0;  // points with u >= 1, v >= 0
  for (std::uint64_t u = 1; u <= s; ++u) {
    const std::uint64_t rest = n - u * u;
    while (v * v > rest) --v;
    quarter += v + 1;
  }
  // the four rotations of {u >= 1, v >= 0} tile the plane minus the origin
  return 4 * quarter + 1;
}

Integer disc_count(const Rational& t) {
  if (t < 0) throw DomainError("disc_count requires T >= 0");
  const Integer n = floor(t);
  if (fits_u64(n) && n < (Integer(1) << 62)) return Integer(disc_count(to_u64(n)));
  // large T: the same rows with arbitrary-precision square roots
  const Integer s = isqrt(n);
  Integer total = 2 * s + 1;
  for (Integer u = 1; u <= s; ++u) total += 2 * (2 * isqrt(n - u * u) + 1);
  return total;
}

namespace {

struct SliceForm {
  Integer disc_coeff;   // q^3 D
  Integer axis_coeff;   // p^3 D
  Integer rhs;          // p q^2 X
  std::uint64_t slices; // max |u3|
};

SliceForm slice_form(const EllipsoidParams& p) {
  const Integer& pa = p.a.get_num();
  const Integer& qa = p.a.get_den();
  const Integer& xn = p.x.get_num();
  const Integer& xd = p.x.get_den();
  SliceForm f;
  f.disc_coeff = qa * qa * qa * xd;
  f.axis_coeff = pa * pa * pa * xd;
  f.rhs = pa * qa * qa * xn;
  const Integer s = isqrt_rational_floor(p.x / (p.a * p.a));
  if (!fits_u64(s)) throw BudgetExceeded(~std::uint64_t{0}, 0);
  f.slices = to_u64(s);
  return f;
}

Integer slice_bound(const SliceForm& f, std::uint64_t u3) {
  const Integer w = Integer(u3) * u3;
  Integer t;
  mpz_fdiv_q(t.get_mpz_t(), Integer(f.rhs - f.axis_coeff * w).get_mpz_t(),
             f.disc_coeff.get_mpz_t());
  return t;
}

}  // namespace

Integer count_work(const EllipsoidParams& p) {
  const SliceForm f = slice_form(p);
  Integer rows = 0;
  for (std::uint64_t u3 = 0; u3 <= f.slices; ++u3) {
    const Integer rows_here = 2 * isqrt(slice_bound(f, u3)) + 1;
    rows += u3 == 0 ? rows_here : 2 * rows_here;
  }
  return rows;
}

Integer lattice_count(const EllipsoidParams& p, const CountOptions& options) {
  const SliceForm f = slice_form(p);
  if (f.slices > options.budget) throw BudgetExceeded(f.slices, options.budget);

  std::vector<Integer> bounds;
  bounds.reserve(f.slices + 1);
  Integer rows = 0;
  for (std::uint64_t u3 = 0; u3 <= f.slices; ++u3) {
    bounds.push_back(slice_bound(f, u3));
    const Integer rows_here = 2 * isqrt(bounds.back()) + 1;
    rows += u3 == 0 ? rows_here : 2 * rows_here;
  }
  if (!fits_u64(rows) || to_u64(rows) > options.budget) {
    throw BudgetExceeded(fits_u64(rows) ? to_u64(rows) : ~std::uint64_t{0}, options.budget);
  }

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(bounds.size()));

  const Integer small_limit = Integer(1) << 62;
  std::atomic<std::size_t> next{0};
  std::vector<Integer> partial(threads, 0);
  auto worker = [&](unsigned id) {
    unsigned __int128 acc = 0;
    Integer big = 0;
    for (std::size_t i = next.fetch_add(1); i < bounds.size(); i = next.fetch_add(1)) {
      const unsigned weight = i == 0 ? 1 : 2;
      if (bounds[i] < small_limit) {
        acc += static_cast<unsigned __int128>(disc_count(to_u64(bounds[i]))) * weight;
      } else {
        big += disc_count(Rational(bounds[i])) * weight;
      }
    }
    const auto hi = static_cast<std::uint64_t>(acc >> 64);
    const auto lo = static_cast<std::uint64_t>(acc);
    partial[id] = (Integer(hi) << 64) + Integer(lo) + big;
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }
  Integer total = 0;
  for (const auto& v : partial) total += v;
  return total;
}

Real volume(const Real& x) {
  if (x <= 0) throw DomainError("volume requires x > 0");
  return 4 * pi() / 3 * x * sqrt(x);
}

Real volume(const Rational& x) { return volume(to_real(x)); }

DiscrepancyResult discrepancy(const EllipsoidParams& p, const CountOptions& options) {
  DiscrepancyResult r;
  r.n_count = lattice_count(p, options);
  r.volume = volume(p.x);
  r.p_value = to_real(r.n_count) - r.volume;
  return r;
}

}  // namespace elat::count
