#include "rcb/sampling.hpp"

#include <algorithm>

namespace rcb::sampling {

using projline::Interval;
using projline::IntervalConfig;
using projline::ProjPoint;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rat random_rat(Rng& rng, long num_bound, long den_bound) {
  return make_rat(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

std::vector<Rat> distinct_sorted(Rng& rng, std::size_t n, long bound, long den_bound) {
  std::vector<Rat> out;
  while (out.size() < n) {
    const long den = uniform(rng, 1, den_bound);
    const Rat v = make_rat(uniform(rng, -bound * den + 1, bound * den - 1), den);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProjPoint random_point(Rng& rng) {
  if (uniform(rng, 0, 9) == 0) return ProjPoint::infinity();
  return ProjPoint::finite(random_rat(rng, 12, 6));
}

projline::Moebius random_moebius(Rng& rng) {
  for (;;) {
    const long a = uniform(rng, -5, 5), b = uniform(rng, -5, 5), c = uniform(rng, -5, 5), d = uniform(rng, -5, 5);
    if (a * d - b * c != 0) return projline::Moebius(a, b, c, d);
  }
}

IntervalConfig random_config(Rng& rng, std::size_t r, bool wrap) {
  const auto b = distinct_sorted(rng, 2 * r, 10, 4);
  std::vector<Interval> arcs;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t s = wrap ? 2 * i + 1 : 2 * i;
    arcs.emplace_back(ProjPoint::finite(b[s]), ProjPoint::finite(b[(s + 1) % (2 * r)]));
  }
  return IntervalConfig(std::move(arcs));
}

IntervalConfig random_finite_config(Rng& rng, std::size_t r) { return random_config(rng, r, false); }

conic::ConicModel random_model(Rng& rng, std::size_t r) { return conic::ConicModel(distinct_sorted(rng, 2 * r, 6, 3)); }

std::optional<conic::SurfPoint> random_surface_point(Rng& rng, const conic::ConicModel& m, int tries) {
  const auto& a = m.roots();
  for (int attempt = 0; attempt < tries; ++attempt) {
    const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m.components()) - 1));
    const long den = uniform(rng, 2, 12);
    const Rat x = a[2 * i] + (a[2 * i + 1] - a[2 * i]) * make_rat(uniform(rng, 1, den - 1), den);
    if (auto p = conic::fiber_point(m, x)) {
      const auto circle = conic::fiber_circle_points(*p, 4);
      return circle[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(circle.size()) - 1))];
    }
  }
  return std::nullopt;
}

twist::Rotation random_rotation(Rng& rng) { return twist::Rotation::from_half_angle(random_rat(rng, 9, 7)); }

std::vector<delpezzo::BiPoint> random_biconic_points(Rng& rng, const delpezzo::BiconicModel& m, std::size_t count) {
  std::vector<delpezzo::BiPoint> out;
  const auto image = delpezzo::biconic_interval_image(m);
  std::vector<delpezzo::BiPoint> bases;
  for (const auto& t : delpezzo::interior_parameters(image, 40)) {
    if (auto p = delpezzo::find_fiber_point(m, t)) bases.push_back(*p);
  }
  for (auto& p : delpezzo::find_surface_points(m, 40)) bases.push_back(std::move(p));
  if (bases.empty()) return out;
  while (out.size() < count) {
    const auto& base = bases[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(bases.size()) - 1))];
    const auto fibre = delpezzo::fiber_points_from(m, base, 12);
    out.push_back(fibre[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(fibre.size()) - 1))]);
  }
  return out;
}

planner::Region random_region(Rng& rng, std::size_t max_rects, long size) {
  planner::Region region;
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_rects)));
  for (std::size_t i = 0; i < n; ++i) {
    const long x0 = uniform(rng, 0, size - 1), y0 = uniform(rng, 0, size - 1);
    const long x1 = uniform(rng, x0 + 1, std::min(size, x0 + size / 2));
    const long y1 = uniform(rng, y0 + 1, std::min(size, y0 + size / 2));
    region.rects.emplace_back(Rat(x0), Rat(x1), Rat(y0), Rat(y1));
  }
  return region;
}

planner::Point2 random_region_point(Rng& rng, const planner::Region& region) {
  const auto& r = region.rects[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(region.rects.size()) - 1))];
  auto pick = [&](const Rat& lo, const Rat& hi) -> Rat {
    const long steps = Rat((hi - lo) * 2).get_num().get_si();
    return lo + make_rat(uniform(rng, 0, steps), 2);
  };
  return {pick(r.x0, r.x1), pick(r.y0, r.y1)};
}

}  // namespace rcb::sampling
