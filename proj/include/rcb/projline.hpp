#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rcb/rational.hpp"

namespace rcb::projline {

/// A point (u0 : u1) of the real projective line with integer coordinates,
/// gcd 1 and first nonzero entry positive. Infinity is (1 : 0); the finite
/// point x is (num(x) : den(x)) up to that normalization.
class ProjPoint {
 public:
  ProjPoint(Int u0, Int u1);
  static ProjPoint finite(const Rat& x);
  static ProjPoint infinity() { return ProjPoint(1, 0); }

  const Int& u0() const { return u0_; }
  const Int& u1() const { return u1_; }
  bool is_infinite() const { return u1_ == 0; }
  /// Affine value u0/u1; throws for infinity.
  Rat value() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  Int u0_, u1_;
};

/// Total order on P^1(R) following the positive orientation: finite points
/// increasing, infinity last.
std::strong_ordering cyclic_compare(const ProjPoint& a, const ProjPoint& b);

struct ProjPointLess {
  bool operator()(const ProjPoint& a, const ProjPoint& b) const { return cyclic_compare(a, b) < 0; }
};

std::string to_string(const ProjPoint& p);

/// z -> (a z + b) / (c z + d), stored as coprime integers with the first
/// nonzero coefficient positive. Orientation is the sign of ad - bc, which
/// this normalization preserves.
class Moebius {
 public:
  Moebius(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
  static Moebius identity() { return Moebius(1, 0, 0, 1); }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }
  Int det() const { return a_ * d_ - b_ * c_; }
  int orientation() const;

  Moebius inverse() const;
  /// (*this) o other
  Moebius compose(const Moebius& other) const;

  friend bool operator==(const Moebius&, const Moebius&) = default;

 private:
  Int a_, b_, c_, d_;
};

std::string to_string(const Moebius& m);

ProjPoint moebius_apply(const Moebius& m, const ProjPoint& p);

/// The unique map sending p_i to q_i. Throws InvalidTriple on a repeated
/// point in either triple.
Moebius moebius_from_triples(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                             const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3);

/// Image of p4 under the map sending (p1, p2, p3) to (0, 1, inf).
ProjPoint cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                      const ProjPoint& p4);

/// Closed arc traversed in positive orientation from start to end.
class Interval {
 public:
  Interval(ProjPoint start, ProjPoint end);

  const ProjPoint& start() const { return start_; }
  const ProjPoint& end() const { return end_; }
  bool contains(const ProjPoint& p) const;
  bool contains_infinity() const { return contains(ProjPoint::infinity()); }
  /// A point strictly inside the arc: the affine midpoint when the arc
  /// avoids infinity, infinity itself when the arc passes through it, and
  /// one unit away from the finite end when infinity is an endpoint.
  ProjPoint interior_sample() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  ProjPoint start_, end_;
};

Interval interval_image(const Moebius& m, const Interval& arc);

/// Pairwise disjoint closed arcs with 2r distinct boundary points, stored
/// sorted by start point (infinity first, then finite starts ascending).
class IntervalConfig {
 public:
  IntervalConfig() = default;
  explicit IntervalConfig(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }

  /// s_0, e_0, s_1, e_1, ...; this is a positive cyclic order.
  std::vector<ProjPoint> boundary() const;
  /// Index of the interval containing p, if any.
  std::optional<std::size_t> locate(const ProjPoint& p) const;

  friend bool operator==(const IntervalConfig&, const IntervalConfig&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// A permutation of {0, ..., r-1}: entry i is the image of i.
using Permutation = std::vector<std::size_t>;

struct ConfigMatch {
  Moebius map;
  Permutation perm;
};

/// True when `m` sends interval i of `from` exactly onto interval perm[i]
/// of `to` (endpoint equality plus one interior sample per arc).
bool verify_match(const IntervalConfig& from, const IntervalConfig& to, const Moebius& m,
                  const Permutation& perm);

/// Every candidate map sending `from` onto `to`, in search order:
/// orientation preserving before reversing, then by boundary shift.
std::vector<ConfigMatch> config_matches(const IntervalConfig& from, const IntervalConfig& to);

/// First match in search order, restricted to `perm` when given.
std::optional<ConfigMatch> config_equiv(const IntervalConfig& from, const IntervalConfig& to,
                                        const std::optional<Permutation>& perm = std::nullopt);

/// The permutations of the intervals realized by maps of the projective
/// line, each with its first witness.
std::vector<ConfigMatch> realizable_permutations(const IntervalConfig& config);

/// All maps preserving a finite set of at least three points.
std::vector<Moebius> stabilizer(const std::vector<ProjPoint>& points);

Permutation identity_permutation(std::size_t n);
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);

}  // namespace rcb::projline
