#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcb/poly.hpp"
#include "rcb/projline.hpp"

namespace rcb::conic {

/// Affine surface y^2 + z^2 = Q(x) with Q = -(x - a_1)...(x - a_2r) and
/// a_1 < ... < a_2r. Its real part projects onto the arcs [a_1, a_2],
/// [a_3, a_4], ...
class ConicModel {
 public:
  explicit ConicModel(std::vector<Rat> roots);

  const std::vector<Rat>& roots() const { return roots_; }
  std::size_t components() const { return roots_.size() / 2; }
  const RatPoly& q() const { return q_; }
  Rat q_at(const Rat& x) const { return q_(x); }

  friend bool operator==(const ConicModel& a, const ConicModel& b) { return a.roots_ == b.roots_; }

 private:
  std::vector<Rat> roots_;
  RatPoly q_;
};

struct SurfPoint {
  Rat x, y, z;
  friend bool operator==(const SurfPoint&, const SurfPoint&) = default;
};

std::string to_string(const SurfPoint& p);

/// A model together with distinct real proper points to be blown up.
class MarkedModel {
 public:
  MarkedModel(ConicModel model, std::vector<SurfPoint> marks);

  const ConicModel& model() const { return model_; }
  const std::vector<SurfPoint>& marks() const { return marks_; }
  /// Number of marks on each connected component.
  std::vector<std::size_t> mark_counts() const;

 private:
  ConicModel model_;
  std::vector<SurfPoint> marks_;
};

/// Throws MoveInfinityFirst when infinity is a boundary point or lies
/// inside an arc.
ConicModel model_from_config(const projline::IntervalConfig& config);
projline::IntervalConfig interval_image(const ConicModel& m);

bool on_surface(const ConicModel& m, const SurfPoint& p);

/// The positive constant lambda with Q' = lambda Q, and the induced map
/// (x, y, z) -> (x, sqrt(lambda) y, sqrt(lambda) z) when sqrt(lambda) is
/// rational.
class ScalingIso {
 public:
  ScalingIso(Rat lambda, std::optional<Rat> root) : lambda_(std::move(lambda)), root_(std::move(root)) {}

  const Rat& lambda() const { return lambda_; }
  bool is_exact() const { return root_.has_value(); }
  const std::optional<Rat>& root() const { return root_; }
  /// Throws SymbolicOnly when lambda is not a rational square.
  SurfPoint apply(const SurfPoint& p) const;

 private:
  Rat lambda_;
  std::optional<Rat> root_;
};

ScalingIso scaling_iso(const ConicModel& m, const RatPoly& other_q);

/// 0-based index of the component containing p. Boundary points belong to
/// their component.
std::size_t component_index(const ConicModel& m, const SurfPoint& p);

/// Component topology: a sphere when cross_caps == 0, otherwise the
/// non-orientable surface with that many cross-caps.
struct ComponentType {
  std::size_t cross_caps = 0;
  std::string name() const;
  friend bool operator==(const ComponentType&, const ComponentType&) = default;
};

std::vector<ComponentType> marked_homeo_types(const MarkedModel& m);

std::optional<projline::ConfigMatch> decide_birational(const ConicModel& a, const ConicModel& b);

/// Certificate for an isomorphism of blown-up real parts: a map of the
/// base matching intervals by `perm`, with equal mark counts on matched
/// components.
std::optional<projline::ConfigMatch> decide_marked_iso(const MarkedModel& a, const MarkedModel& b);

struct VeryTransitiveVerdict {
  bool very_transitive = false;
  /// Very transitive on each connected component (holds iff r <= 3).
  bool componentwise = false;
  bool two_transitive = false;
  /// Identifier of the decision-table row that fired.
  std::string rule;
  /// Failing condition for a negative verdict, empty otherwise.
  std::string failure;
  std::vector<ComponentType> types;
  std::vector<projline::ConfigMatch> witnesses;
};

VeryTransitiveVerdict decide_very_transitive(const MarkedModel& m);

/// A rational point of the fibre over x, or nullopt when Q(x) < 0 or no
/// representation of Q(x) as a sum of two rational squares was found.
std::optional<SurfPoint> fiber_point(const ConicModel& m, const Rat& x);

/// `count` distinct rational points of the fibre circle through `base`,
/// obtained by rotating it through the Pythagorean rotations. Returns just
/// `base` on a singular fibre.
std::vector<SurfPoint> fiber_circle_points(const SurfPoint& base, std::size_t count);

}  // namespace rcb::conic
