#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "rcb/conic_model.hpp"
#include "rcb/delpezzo.hpp"
#include "rcb/planner.hpp"
#include "rcb/projline.hpp"
#include "rcb/twist.hpp"

/// Seeded random instances shared by the self-test and the test suites.
/// Every generator draws only from the engine it is given.
namespace rcb::sampling {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
Rat random_rat(Rng& rng, long num_bound, long den_bound);
/// `n` distinct rationals in (-bound, bound), sorted.
std::vector<Rat> distinct_sorted(Rng& rng, std::size_t n, long bound, long den_bound);

projline::ProjPoint random_point(Rng& rng);
/// Integer entries in [-5, 5] with nonzero determinant.
projline::Moebius random_moebius(Rng& rng);

/// r arcs with finite boundaries; with `wrap` set the pairing is shifted
/// by one so that one arc passes through infinity.
projline::IntervalConfig random_config(Rng& rng, std::size_t r, bool wrap = false);
/// Finite arcs [a1, a2], [a3, a4], ... from sorted random boundaries.
projline::IntervalConfig random_finite_config(Rng& rng, std::size_t r);

conic::ConicModel random_model(Rng& rng, std::size_t r);
/// A rational point over a random parameter of a random arc; nullopt after
/// `tries` failed attempts.
std::optional<conic::SurfPoint> random_surface_point(Rng& rng, const conic::ConicModel& m, int tries = 200);
twist::Rotation random_rotation(Rng& rng);

/// Random rational points of a biconic model, found fibre by fibre.
std::vector<delpezzo::BiPoint> random_biconic_points(Rng& rng, const delpezzo::BiconicModel& m, std::size_t count);

/// Up to `max_rects` boxes with integer corners in [0, size].
planner::Region random_region(Rng& rng, std::size_t max_rects, long size);
/// A random half-integer point of the region.
planner::Point2 random_region_point(Rng& rng, const planner::Region& region);

}  // namespace rcb::sampling
