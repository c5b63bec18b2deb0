#include "rcb/conic_model.hpp"

#include <algorithm>

#include "rcb/error.hpp"

namespace rcb::conic {

using rcb::to_string;

using projline::ConfigMatch;
using projline::Interval;
using projline::IntervalConfig;
using projline::Permutation;
using projline::ProjPoint;

ConicModel::ConicModel(std::vector<Rat> roots) : roots_(std::move(roots)) {
  if (roots_.empty() || roots_.size() % 2 != 0) {
    throw Error("InvalidModel", "a model needs a positive even number of roots");
  }
  for (std::size_t i = 1; i < roots_.size(); ++i) {
    if (!(roots_[i - 1] < roots_[i])) throw Error("InvalidModel", "roots must be strictly increasing");
  }
  q_ = RatPoly::constant(Rat(-1));
  for (const auto& a : roots_) q_ = q_ * RatPoly::linear_root(a);
}

std::string to_string(const SurfPoint& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ", " + to_string(p.z) + ")";
}

MarkedModel::MarkedModel(ConicModel model, std::vector<SurfPoint> marks)
    : model_(std::move(model)), marks_(std::move(marks)) {
  for (std::size_t i = 0; i < marks_.size(); ++i) {
    if (!on_surface(model_, marks_[i])) {
      throw Error("NotOnSurface", "mark " + to_string(marks_[i]) + " is not on the model");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (marks_[i] == marks_[j]) throw Error("DuplicateMark", "mark " + to_string(marks_[i]) + " repeated");
    }
  }
}

std::vector<std::size_t> MarkedModel::mark_counts() const {
  std::vector<std::size_t> counts(model_.components(), 0);
  for (const auto& p : marks_) ++counts[component_index(model_, p)];
  return counts;
}

ConicModel model_from_config(const IntervalConfig& config) {
  if (config.empty()) throw Error("EmptyConfig", "a model needs at least one interval");
  std::vector<Rat> roots;
  for (const auto& arc : config.intervals()) {
    if (arc.start().is_infinite() || arc.end().is_infinite() || arc.contains_infinity()) {
      throw Error("MoveInfinityFirst", "infinity lies in the configuration; conjugate it away first");
    }
    roots.push_back(arc.start().value());
    roots.push_back(arc.end().value());
  }
  std::sort(roots.begin(), roots.end());
  return ConicModel(std::move(roots));
}

IntervalConfig interval_image(const ConicModel& m) {
  std::vector<Interval> arcs;
  const auto& a = m.roots();
  for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
    arcs.emplace_back(ProjPoint::finite(a[i]), ProjPoint::finite(a[i + 1]));
  }
  return IntervalConfig(std::move(arcs));
}

bool on_surface(const ConicModel& m, const SurfPoint& p) { return p.y * p.y + p.z * p.z == m.q_at(p.x); }

SurfPoint ScalingIso::apply(const SurfPoint& p) const {
  if (!root_) {
    throw Error("SymbolicOnly", "scaling factor " + to_string(lambda_) + " is not a rational square");
  }
  return {p.x, *root_ * p.y, *root_ * p.z};
}

ScalingIso scaling_iso(const ConicModel& m, const RatPoly& other_q) {
  const RatPoly& q = m.q();
  if (other_q.degree() != q.degree()) throw Error("NotProportional", "degrees differ");
  const Rat lambda = other_q.leading() / q.leading();
  if (lambda <= 0) throw Error("NotProportional", "scaling factor is not positive");
  if (!(other_q == lambda * q)) throw Error("NotProportional", "polynomials are not proportional");
  return ScalingIso(lambda, exact_sqrt(lambda));
}

std::size_t component_index(const ConicModel& m, const SurfPoint& p) {
  if (!on_surface(m, p)) throw Error("NotOnSurface", "point " + to_string(p) + " is not on the model");
  const auto& a = m.roots();
  for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
    if (a[i] <= p.x && p.x <= a[i + 1]) return i / 2;
  }
  // Unreachable for points on the surface: Q(x) >= 0 only on the arcs.
  throw Error("NotOnSurface", "point " + to_string(p) + " lies over no component");
}

std::string ComponentType::name() const {
  return cross_caps == 0 ? std::string("S2") : "N" + std::to_string(cross_caps);
}

std::vector<ComponentType> marked_homeo_types(const MarkedModel& m) {
  std::vector<ComponentType> out;
  for (auto count : m.mark_counts()) out.push_back({count});
  return out;
}

std::optional<ConfigMatch> decide_birational(const ConicModel& a, const ConicModel& b) {
  return projline::config_equiv(interval_image(a), interval_image(b));
}

std::optional<ConfigMatch> decide_marked_iso(const MarkedModel& a, const MarkedModel& b) {
  const auto counts_a = a.mark_counts();
  const auto counts_b = b.mark_counts();
  for (auto& match : projline::config_matches(interval_image(a.model()), interval_image(b.model()))) {
    bool ok = true;
    for (std::size_t i = 0; i < counts_a.size() && ok; ++i) ok = counts_a[i] == counts_b[match.perm[i]];
    if (ok) return std::move(match);
  }
  return std::nullopt;
}

namespace {

bool is_transposition(const Permutation& p, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::size_t want = k == i ? j : (k == j ? i : k);
    if (p[k] != want) return false;
  }
  return true;
}

}  // namespace

VeryTransitiveVerdict decide_very_transitive(const MarkedModel& m) {
  VeryTransitiveVerdict v;
  const std::size_t r = m.model().components();
  v.types = marked_homeo_types(m);
  v.componentwise = r <= 3;
  const IntervalConfig config = interval_image(m.model());

  if (r >= 4) {
    v.rule = "thm1.2-more-than-3";
    v.failure = "more-than-three-components: not even 2-transitive";
    return v;
  }
  const auto realizable = projline::realizable_permutations(config);
  auto accept = [&](std::string rule, std::vector<ConfigMatch> witnesses) {
    v.very_transitive = true;
    v.two_transitive = true;
    v.rule = std::move(rule);
    v.witnesses = std::move(witnesses);
    return v;
  };
  auto reject = [&](std::string rule, std::string failure) {
    v.rule = std::move(rule);
    v.failure = std::move(failure) + ": not even 2-transitive";
    return v;
  };

  if (r <= 2) return accept("thm1.2(2a)", realizable);

  const auto& t = v.types;
  const bool eq01 = t[0] == t[1], eq02 = t[0] == t[2], eq12 = t[1] == t[2];
  const int pairs = int(eq01) + int(eq02) + int(eq12);
  if (pairs == 0) return accept("thm1.2(2b)", {realizable.front()});
  if (pairs == 1) {
    const std::size_t i = eq01 ? 0 : (eq02 ? 0 : 1);
    const std::size_t j = eq01 ? 1 : 2;
    for (const auto& w : realizable) {
      if (is_transposition(w.perm, i, j)) return accept("thm1.2(2c)", {w});
    }
    return reject("thm1.2(2c)", "transposition-not-realizable");
  }
  if (realizable.size() == 6) return accept("thm1.2(2d)", realizable);
  return reject("thm1.2(2d)", "not-all-permutations-realizable");
}

std::optional<SurfPoint> fiber_point(const ConicModel& m, const Rat& x) {
  const Rat rho = m.q_at(x);
  if (rho < 0) return std::nullopt;
  auto yz = two_squares(rho);
  if (!yz) return std::nullopt;
  return SurfPoint{x, yz->first, yz->second};
}

std::vector<SurfPoint> fiber_circle_points(const SurfPoint& base, std::size_t count) {
  std::vector<SurfPoint> out{base};
  if (base.y == 0 && base.z == 0) return out;
  for (long n = 1; out.size() < count; ++n) {
    // Rotation by psi(t), t = n / (n + 1).
    const Rat t = make_rat(n, n + 1);
    const Rat c = (1 - t * t) / (1 + t * t);
    const Rat s = 2 * t / (1 + t * t);
    SurfPoint p{base.x, c * base.y - s * base.z, s * base.y + c * base.z};
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace rcb::conic
