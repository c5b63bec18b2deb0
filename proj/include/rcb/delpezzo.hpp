#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcb/projline.hpp"

namespace rcb::delpezzo {

using projline::IntervalConfig;
using projline::ProjPoint;

/// alpha a^2 + beta a b + gamma b^2
struct BinQuadForm {
  Rat alpha, beta, gamma;

  Rat operator()(const Int& a, const Int& b) const;
  Rat operator()(const ProjPoint& t) const { return (*this)(t.u0(), t.u1()); }
  Rat discriminant() const { return beta * beta - 4 * alpha * gamma; }
  bool is_zero() const { return alpha == 0 && beta == 0 && gamma == 0; }

  friend bool operator==(const BinQuadForm&, const BinQuadForm&) = default;
};

Rat resultant(const BinQuadForm& f, const BinQuadForm& g);

/// Surface x^2 m1(a,b) + y^2 m2(a,b) + z^2 m3(a,b) = 0 in P^2 x P^1,
/// fibred over P^1 by (a : b), with m1 m2 m3 having six distinct roots.
class BiconicModel {
 public:
  /// `k` is the number of forms that carry a genuine interval.
  BiconicModel(std::array<BinQuadForm, 3> forms, std::size_t k);

  const std::array<BinQuadForm, 3>& forms() const { return forms_; }
  const BinQuadForm& form(std::size_t j) const { return forms_[j]; }
  std::size_t k() const { return k_; }

 private:
  std::array<BinQuadForm, 3> forms_;
  std::size_t k_;
};

/// True when m1 m2 m3 has six distinct roots over C.
bool has_distinct_roots(const std::array<BinQuadForm, 3>& forms);

/// Point ((x : y : z), t); the P^2 part is stored as coprime integers with
/// first nonzero entry positive.
class BiPoint {
 public:
  BiPoint(const std::array<Rat, 3>& xyz, ProjPoint t);

  const std::array<Int, 3>& xyz() const { return xyz_; }
  const ProjPoint& t() const { return t_; }

  friend bool operator==(const BiPoint&, const BiPoint&) = default;

 private:
  std::array<Int, 3> xyz_;
  ProjPoint t_;
};

std::string to_string(const BiPoint& p);

bool on_surface(const BiconicModel& m, const BiPoint& p);

/// The n-th negative definite form -(a^2 + n b^2), n >= 1.
BinQuadForm definite_form(long n);

BiconicModel biconic_from_config(const IntervalConfig& config);
IntervalConfig biconic_interval_image(const BiconicModel& m);

/// Coefficients (A, B, C) of the binary quadratic in (a, b) cut out on
/// P^1 by the P^2 coordinate of p.
std::array<Rat, 3> fiber_quadratic(const BiconicModel& m, const std::array<Int, 3>& xyz);

/// Deck involution of the projection to P^2: keeps (x : y : z) and returns
/// the other root of the fibre quadratic in (a : b).
BiPoint geiser(const BiconicModel& m, const BiPoint& p);
ProjPoint second_fibration(const BiconicModel& m, const BiPoint& p);
/// Fixed point of geiser: the fibre quadratic has a double root.
bool is_ramification(const BiconicModel& m, const BiPoint& p);

/// Search limits for rational points on fibres.
struct SearchBudget {
  long coordinate_bound = 12;
  std::size_t max_fibres = 200;
};

/// A rational point of the conic over t: a bounded search for small points,
/// then Legendre descent. nullopt when the fibre has no rational point.
std::optional<BiPoint> find_fiber_point(const BiconicModel& m, const ProjPoint& t,
                                        const SearchBudget& budget = {});

/// Surface points found by searching small integer (x : y : z) whose fibre
/// quadratic in (a : b) splits over Q; both roots are returned and
/// singular fibres are skipped.
std::vector<BiPoint> find_surface_points(const BiconicModel& m, std::size_t count, const SearchBudget& budget = {});

/// Further rational points of the fibre through `base`, via the lines
/// through it with small integer directions. A singular fibre yields only
/// `base`.
std::vector<BiPoint> fiber_points_from(const BiconicModel& m, const BiPoint& base, std::size_t count);

/// Two points over the same parameter with different second-fibration
/// values. Throws NoRealPoints when k = 0 and WitnessSearchFailed when the
/// budget runs out.
std::pair<BiPoint, BiPoint> distinct_foliations_witness(const BiconicModel& m,
                                                        const SearchBudget& budget = {});

/// Rational parameters strictly inside the arcs of `config`, small height
/// first; the enumeration is deterministic.
std::vector<ProjPoint> interior_parameters(const IntervalConfig& config, std::size_t count);

}  // namespace rcb::delpezzo
