#include "rcb/twist.hpp"

#include <algorithm>

#include "rcb/error.hpp"

namespace rcb::twist {

using rcb::to_string;

using conic::ConicModel;
using conic::SurfPoint;

Rotation::Rotation(Rat c, Rat s) : c_(std::move(c)), s_(std::move(s)) {
  if (!is_unit()) throw Error("NotARotation", "c^2 + s^2 != 1 for (" + to_string(c_) + ", " + to_string(s_) + ")");
}

Rotation Rotation::unchecked(Rat c, Rat s) { return Rotation(std::move(c), std::move(s), NoCheck{}); }

Rotation Rotation::from_half_angle(const Rat& t) {
  const Rat q = 1 + t * t;
  return Rotation((1 - t * t) / q, 2 * t / q);
}

Rotation Rotation::operator*(const Rotation& o) const {
  return unchecked(c_ * o.c_ - s_ * o.s_, c_ * o.s_ + s_ * o.c_);
}

std::pair<Rat, Rat> Rotation::apply(const Rat& y, const Rat& z) const {
  return {c_ * y - s_ * z, s_ * y + c_ * z};
}

Rotation TwistMap::rotation_at(const Rat& x) const { return base * Rotation::from_half_angle(lambda(x)); }

TwistMap TwistMap::inverse() const { return {base.inverse(), -lambda}; }

Rotation rotation_between(const ConicModel& m, const Rat& x, const std::pair<Rat, Rat>& from,
                          const std::pair<Rat, Rat>& to) {
  const Rat rho = m.q_at(x);
  if (rho <= 0) throw Error("EmptyOrSingularFiber", "Q(" + to_string(x) + ") = " + to_string(rho) + " is not positive");
  const auto& [y, z] = from;
  const auto& [v, w] = to;
  if (y * y + z * z != rho || v * v + w * w != rho) {
    throw Error("NotOnFiber", "point is not on the fibre circle over " + to_string(x));
  }
  return Rotation((y * v + z * w) / rho, (y * w - z * v) / rho);
}

Rat chart_param(const Rotation& base, const Rotation& target) {
  const Rotation rel = base.inverse() * target;
  if (rel.c() == -1) throw Error("ChartPole", "target rotation is the pole of the chart");
  return rel.s() / (1 + rel.c());
}

Rotation base_rotation_candidate(std::size_t index) {
  if (index == 0) return Rotation::identity();
  const long n = static_cast<long>(index);
  return Rotation::from_half_angle(make_rat(n, n + 1));
}

Rotation choose_base_rotation(const std::vector<Rotation>& required) {
  for (std::size_t i = 0;; ++i) {
    const Rotation candidate = base_rotation_candidate(i);
    const Rotation pole = Rotation::unchecked(-candidate.c(), -candidate.s());
    if (pole == Rotation::identity()) continue;
    if (std::find(required.begin(), required.end(), pole) != required.end()) continue;
    return candidate;
  }
}

RatPoly interpolate(const std::vector<HermiteNode>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (nodes[i].x == nodes[j].x) throw Error("DuplicateNode", "node x = " + to_string(nodes[i].x) + " repeated");

  // Confluent Vandermonde system: one row per value and per derivative.
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (const auto& node : nodes) {
    rows.emplace_back();
    rhs.push_back(node.value);
    if (node.derivative) {
      rows.emplace_back();
      rhs.push_back(*node.derivative);
    }
  }
  const std::size_t n = rows.size();
  if (n == 0) return {};
  std::size_t r = 0;
  for (const auto& node : nodes) {
    auto& values = rows[r++];
    Rat power = 1;
    for (std::size_t k = 0; k < n; ++k) {
      values.push_back(power);
      power *= node.x;
    }
    if (node.derivative) {
      auto& slopes = rows[r++];
      Rat lower = 1;
      slopes.push_back(Rat(0));
      for (std::size_t k = 1; k < n; ++k) {
        slopes.push_back(Rat(static_cast<long>(k)) * lower);
        lower *= node.x;
      }
    }
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    std::swap(rows[col], rows[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || rows[i][col] == 0) continue;
      const Rat f = rows[i][col] / rows[col][col];
      for (std::size_t k = col; k < n; ++k) rows[i][k] -= f * rows[col][k];
      rhs[i] -= f * rhs[col];
    }
  }
  std::vector<Rat> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = rhs[i] / rows[i][i];
  return RatPoly(std::move(coeffs));
}

TwistMap synthesize_twist(const ConicModel& m, const std::vector<TransportPair>& pairs,
                          const std::vector<Rat>& pins, const std::vector<JetRequest>& jets) {
  std::vector<Rat> pair_xs;
  std::vector<Rotation> rotations;
  for (const auto& [p, q] : pairs) {
    if (p.x != q.x) {
      throw Error("FiberMismatch", "pair " + to_string(p) + " -> " + to_string(q) + " changes the fibre");
    }
    if (!conic::on_surface(m, p) || !conic::on_surface(m, q)) {
      throw Error("NotOnSurface", "pair " + to_string(p) + " -> " + to_string(q) + " is not on the model");
    }
    if (m.q_at(p.x) <= 0) {
      throw Error("SingularFiberTarget", "pair lies on the singular fibre over " + to_string(p.x));
    }
    if (std::find(pair_xs.begin(), pair_xs.end(), p.x) != pair_xs.end()) {
      throw Error("DuplicateFiber", "two pairs share the fibre over " + to_string(p.x));
    }
    pair_xs.push_back(p.x);
    rotations.push_back(rotation_between(m, p.x, {p.y, p.z}, {q.y, q.z}));
  }
  auto collides = [&](const Rat& x) { return std::find(pair_xs.begin(), pair_xs.end(), x) != pair_xs.end(); };

  std::vector<Rat> fixed;
  for (const auto& b : pins) {
    if (m.q_at(b) < 0) throw Error("PinOutsideImage", "pin " + to_string(b) + " is outside the interval image");
    if (collides(b)) throw Error("PinCollision", "pin " + to_string(b) + " is the fibre of a transported pair");
    if (std::find(fixed.begin(), fixed.end(), b) == fixed.end()) fixed.push_back(b);
  }
  std::vector<Rat> jet_xs;
  for (const auto& jet : jets) {
    if (m.q_at(jet.x) <= 0) throw Error("SingularFiberTarget", "jet at " + to_string(jet.x) + " is not on a smooth fibre");
    if (collides(jet.x)) throw Error("PinCollision", "jet " + to_string(jet.x) + " is the fibre of a transported pair");
    if (std::find(jet_xs.begin(), jet_xs.end(), jet.x) != jet_xs.end()) {
      throw Error("DuplicateNode", "two jets at " + to_string(jet.x));
    }
    jet_xs.push_back(jet.x);
  }

  TwistMap out;
  out.base = choose_base_rotation(rotations);
  const Rat at_identity = chart_param(out.base, Rotation::identity());
  std::vector<HermiteNode> nodes;
  for (std::size_t i = 0; i < pair_xs.size(); ++i) nodes.push_back({pair_xs[i], chart_param(out.base, rotations[i]), std::nullopt});
  for (const auto& b : fixed) {
    if (std::find(jet_xs.begin(), jet_xs.end(), b) == jet_xs.end()) nodes.push_back({b, at_identity, std::nullopt});
  }
  // Along the chart, the angle is 2 arctan(lambda); its derivative at the
  // identity is 2 lambda' / (1 + lambda^2), and must equal 2 mu.
  for (const auto& jet : jets) {
    nodes.push_back({jet.x, at_identity, Rat(jet.mu * (1 + at_identity * at_identity))});
  }
  out.lambda = interpolate(nodes);
  return out;
}

SurfPoint apply_twist_unchecked(const TwistMap& t, const SurfPoint& p) {
  auto [y, z] = t.rotation_at(p.x).apply(p.y, p.z);
  return {p.x, std::move(y), std::move(z)};
}

SurfPoint apply_twist(const ConicModel& m, const TwistMap& t, const SurfPoint& p) {
  if (!conic::on_surface(m, p)) throw Error("NotOnSurface", "point " + to_string(p) + " is not on the model");
  return apply_twist_unchecked(t, p);
}

Rat tangent_coefficient(const TwistMap& t, const Rat& x) {
  // sine component of base * psi(lambda) is N / D with
  // N = 2 c0 lambda + s0 (1 - lambda^2), D = 1 + lambda^2.
  const RatPoly& l = t.lambda;
  const RatPoly one = RatPoly::constant(Rat(1));
  const RatPoly num = t.base.c() * (RatPoly::constant(Rat(2)) * l) + t.base.s() * (one - l * l);
  const RatPoly den = one + l * l;
  const Rat d = den(x);
  return (num.derivative()(x) * d - num(x) * den.derivative()(x)) / (d * d);
}

RatPoly orthogonality_defect(const RatPoly& lambda) {
  const RatPoly one = RatPoly::constant(Rat(1));
  const RatPoly sq = lambda * lambda;
  const RatPoly a = one - sq;
  const RatPoly b = RatPoly::constant(Rat(2)) * lambda;
  const RatPoly c = one + sq;
  return a * a + b * b - c * c;
}

std::vector<SurfPoint> sample_surface_points(const ConicModel& m) {
  std::vector<SurfPoint> out;
  const auto& a = m.roots();
  for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
    out.push_back({a[i], 0, 0});
    out.push_back({a[i + 1], 0, 0});
    for (long k = 1; k < 8; ++k) {
      const Rat x = a[i] + (a[i + 1] - a[i]) * make_rat(k, 8);
      if (auto p = conic::fiber_point(m, x)) {
        for (auto& q : conic::fiber_circle_points(*p, 3)) out.push_back(std::move(q));
      }
    }
  }
  return out;
}

TwistReport verify_twist(const ConicModel& m, const TwistMap& t) {
  TwistReport report;
  report.base_unit = t.base.is_unit();
  if (!report.base_unit) report.failures.push_back("base rotation is not on the unit circle");
  report.orthogonal = report.base_unit && orthogonality_defect(t.lambda).is_zero();
  if (!report.orthogonal) report.failures.push_back("fibre maps are not orthogonal");

  const auto samples = sample_surface_points(m);
  report.samples = samples.size();
  report.preserves_surface = true;
  report.invertible = true;
  const TwistMap inv = t.inverse();
  for (const auto& p : samples) {
    const SurfPoint image = apply_twist_unchecked(t, p);
    if (!conic::on_surface(m, image)) {
      if (report.preserves_surface) report.failures.push_back("image of " + to_string(p) + " left the surface");
      report.preserves_surface = false;
    }
    if (!(apply_twist_unchecked(inv, image) == p)) {
      if (report.invertible) report.failures.push_back("inverse twist does not return " + to_string(p));
      report.invertible = false;
    }
  }
  return report;
}

}  // namespace rcb::twist
