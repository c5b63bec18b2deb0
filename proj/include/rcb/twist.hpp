#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcb/conic_model.hpp"
#include "rcb/poly.hpp"

namespace rcb::twist {

/// Element (c, s) of SO2 with c^2 + s^2 = 1, acting by
/// (y, z) -> (c y - s z, s y + c z).
class Rotation {
 public:
  Rotation(Rat c, Rat s);
  /// Skips the unit-circle check; only meant for building negative controls.
  static Rotation unchecked(Rat c, Rat s);
  static Rotation identity() { return Rotation(Rat(1), Rat(0)); }
  /// psi(t) = ((1 - t^2) / (1 + t^2), 2t / (1 + t^2))
  static Rotation from_half_angle(const Rat& t);

  const Rat& c() const { return c_; }
  const Rat& s() const { return s_; }
  bool is_unit() const { return c_ * c_ + s_ * s_ == 1; }
  Rotation inverse() const { return unchecked(c_, -s_); }
  Rotation operator*(const Rotation& o) const;
  std::pair<Rat, Rat> apply(const Rat& y, const Rat& z) const;

  friend bool operator==(const Rotation&, const Rotation&) = default;

 private:
  struct NoCheck {};
  Rotation(Rat c, Rat s, NoCheck) : c_(std::move(c)), s_(std::move(s)) {}
  Rat c_, s_;
};

/// Fibrewise map (x, y, z) -> (x, Phi(x)(y, z)) with
/// Phi(x) = base * psi(lambda(x)). Since 1 + lambda^2 > 0 on R, Phi is
/// defined for every real x.
struct TwistMap {
  Rotation base = Rotation::identity();
  RatPoly lambda;

  Rotation rotation_at(const Rat& x) const;
  /// Phi^-1 = base^-1 * psi(-lambda)
  TwistMap inverse() const;
};

struct HermiteNode {
  Rat x;
  Rat value;
  std::optional<Rat> derivative;
};

Rotation rotation_between(const conic::ConicModel& m, const Rat& x, const std::pair<Rat, Rat>& from,
                          const std::pair<Rat, Rat>& to);

/// lambda with base * psi(lambda) == target. Throws ChartPole when
/// base^-1 * target is the half turn.
Rat chart_param(const Rotation& base, const Rotation& target);

/// Candidate base rotations in the order they are tried: the identity, then
/// psi(n / (n + 1)) for n = 1, 2, ...
Rotation base_rotation_candidate(std::size_t index);

/// First candidate R whose chart pole -R is neither the identity nor any
/// required rotation.
Rotation choose_base_rotation(const std::vector<Rotation>& required);

/// Minimal-degree polynomial through the given values and optional first
/// derivatives. Throws DuplicateNode.
RatPoly interpolate(const std::vector<HermiteNode>& nodes);

struct TransportPair {
  conic::SurfPoint from, to;
};

/// Request for a tangent jet at a pinned fibre: the fibre over x stays
/// pointwise fixed and the linearized action there is [y] -> [y] - 2 mu [x].
struct JetRequest {
  Rat x;
  Rat mu;
};

TwistMap synthesize_twist(const conic::ConicModel& m, const std::vector<TransportPair>& pairs,
                          const std::vector<Rat>& pins, const std::vector<JetRequest>& jets = {});

/// Throws NotOnSurface for an input off the model.
conic::SurfPoint apply_twist(const conic::ConicModel& m, const TwistMap& t, const conic::SurfPoint& p);

/// Same map without the membership check on the input.
conic::SurfPoint apply_twist_unchecked(const TwistMap& t, const conic::SurfPoint& p);

/// Tangent coefficient kappa of the linearized action [y] -> [y] - kappa [x]
/// at a fibre where the twist is the identity: the derivative at x of the
/// sine component of Phi, computed exactly.
Rat tangent_coefficient(const TwistMap& t, const Rat& x);

/// (1 - lambda^2)^2 + (2 lambda)^2 - (1 + lambda^2)^2, which must be zero.
RatPoly orthogonality_defect(const RatPoly& lambda);

struct TwistReport {
  bool base_unit = false;
  bool orthogonal = false;
  bool preserves_surface = false;
  bool invertible = false;
  std::size_t samples = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Deterministic rational points of the model used by verify_twist: the
/// singular-fibre points (a_i, 0, 0) plus, over a few parameters in each
/// arc, several points of the fibre circle.
std::vector<conic::SurfPoint> sample_surface_points(const conic::ConicModel& m);

TwistReport verify_twist(const conic::ConicModel& m, const TwistMap& t);

}  // namespace rcb::twist
