#pragma once

#include <optional>
#include <set>
#include <vector>

#include "rcb/lattice.hpp"
#include "rcb/planner.hpp"
#include "rcb/projline.hpp"

namespace oracle {

/// Every permutation of intervals realized by some map of the projective
/// line, found by sending a fixed ordered boundary triple of `from` to every
/// ordered boundary triple of `to`. Arithmetic is independent of the
/// library: maps are built from column matrices, arcs are tested on keys.
std::set<rcb::projline::Permutation> realized_permutations(const rcb::projline::IntervalConfig& from,
                                                           const rcb::projline::IntervalConfig& to);

/// Same search over every ordered boundary triple of `from` as well.
std::set<rcb::projline::Permutation> realized_permutations_all_triples(const rcb::projline::IntervalConfig& from,
                                                                       const rcb::projline::IntervalConfig& to);

/// Maps fixing a finite point set, by brute force over triple images.
std::size_t stabilizer_order(const std::vector<rcb::projline::ProjPoint>& points);

/// (-1)-classes with every coordinate in [-bound, bound].
std::vector<rcb::lattice::PicVector> exceptional_by_search(std::size_t n, long bound);

/// Reachability on a uniform grid of step half the smallest coordinate gap.
bool grid_connected(const rcb::planner::Region& region, const rcb::planner::Point2& start,
                    const rcb::planner::Point2& end, const rcb::planner::Forbidden& forbidden);

}  // namespace oracle
