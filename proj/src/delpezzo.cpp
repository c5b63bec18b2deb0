#include "rcb/delpezzo.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rcb/error.hpp"

namespace rcb::delpezzo {

using rcb::to_string;

using projline::Interval;
using projline::ProjPointLess;

Rat BinQuadForm::operator()(const Int& a, const Int& b) const {
  return alpha * Rat(a * a) + beta * Rat(a * b) + gamma * Rat(b * b);
}

Rat resultant(const BinQuadForm& f, const BinQuadForm& g) {
  const Rat ag = f.alpha * g.gamma - g.alpha * f.gamma;
  const Rat ab = f.alpha * g.beta - g.alpha * f.beta;
  const Rat bg = f.beta * g.gamma - g.beta * f.gamma;
  return ag * ag - ab * bg;
}

bool has_distinct_roots(const std::array<BinQuadForm, 3>& forms) {
  for (const auto& f : forms) {
    if (f.is_zero() || f.discriminant() == 0) return false;
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (resultant(forms[i], forms[j]) == 0) return false;
  return true;
}

BiconicModel::BiconicModel(std::array<BinQuadForm, 3> forms, std::size_t k) : forms_(std::move(forms)), k_(k) {
  if (k_ > 3) throw Error("TooManyIntervals", "at most three intervals");
  if (!has_distinct_roots(forms_)) {
    throw Error("RepeatedRoots", "m1 m2 m3 must have six distinct roots");
  }
}

namespace {

std::array<Int, 3> normalize_triple(const std::array<Rat, 3>& v) {
  Int den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  std::array<Int, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = v[i].get_num() * (den / v[i].get_den());
  Int g = 0;
  for (const auto& x : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw Error("ZeroPoint", "(0 : 0 : 0) is not a point of P^2");
  const auto first = std::find_if(out.begin(), out.end(), [](const Int& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

}  // namespace

BiPoint::BiPoint(const std::array<Rat, 3>& xyz, ProjPoint t) : xyz_(normalize_triple(xyz)), t_(std::move(t)) {}

std::string to_string(const BiPoint& p) {
  return "((" + p.xyz()[0].get_str() + ":" + p.xyz()[1].get_str() + ":" + p.xyz()[2].get_str() + "),(" +
         p.t().u0().get_str() + ":" + p.t().u1().get_str() + "))";
}

std::array<Rat, 3> fiber_quadratic(const BiconicModel& m, const std::array<Int, 3>& xyz) {
  std::array<Rat, 3> out{Rat(0), Rat(0), Rat(0)};
  for (std::size_t j = 0; j < 3; ++j) {
    const Rat sq(xyz[j] * xyz[j]);
    out[0] += sq * m.form(j).alpha;
    out[1] += sq * m.form(j).beta;
    out[2] += sq * m.form(j).gamma;
  }
  return out;
}

bool on_surface(const BiconicModel& m, const BiPoint& p) {
  const auto [A, B, C] = fiber_quadratic(m, p.xyz());
  const Int& a = p.t().u0();
  const Int& b = p.t().u1();
  return A * Rat(a * a) + B * Rat(a * b) + C * Rat(b * b) == 0;
}

BinQuadForm definite_form(long n) { return {Rat(-1), Rat(0), Rat(-n)}; }

namespace {

void require_finite(const IntervalConfig& config) {
  for (const auto& arc : config.intervals()) {
    if (arc.start().is_infinite() || arc.end().is_infinite() || arc.contains_infinity()) {
      throw Error("MoveInfinityFirst", "infinity lies in the configuration; conjugate it away first");
    }
  }
}

// Real roots of a form; throws when they are irrational.
std::vector<ProjPoint> real_roots(const BinQuadForm& f) {
  if (f.alpha == 0) return {ProjPoint::infinity(), ProjPoint::finite(Rat(-f.gamma / f.beta))};
  const Rat disc = f.discriminant();
  if (disc < 0) return {};
  const auto root = exact_sqrt(disc);
  if (!root) throw Error("IrrationalBoundary", "form has irrational real roots");
  return {ProjPoint::finite(Rat((-f.beta + *root) / (2 * f.alpha))),
          ProjPoint::finite(Rat((-f.beta - *root) / (2 * f.alpha)))};
}

// A fibre has real points unless the three coefficients share a strict sign.
bool fibre_is_real(const BiconicModel& m, const ProjPoint& t) {
  int pos = 0, neg = 0;
  for (const auto& f : m.forms()) {
    const int s = sign(f(t));
    pos += s > 0;
    neg += s < 0;
  }
  return pos != 3 && neg != 3;
}

}  // namespace

BiconicModel biconic_from_config(const IntervalConfig& config) {
  if (config.size() > 3) throw Error("TooManyIntervals", "a degree 2 del Pezzo model carries at most three intervals");
  require_finite(config);
  const std::size_t k = config.size();
  std::array<BinQuadForm, 3> forms;
  for (std::size_t j = 0; j < k; ++j) {
    const Rat s = config[j].start().value();
    const Rat e = config[j].end().value();
    // -(a - s b)(a - e b): vanishes at both ends, non-negative between.
    forms[j] = {Rat(-1), Rat(s + e), Rat(-s * e)};
  }
  for (long n = 1;; ++n) {
    for (std::size_t j = k; j < 3; ++j) forms[j] = definite_form(n + static_cast<long>(j - k));
    if (has_distinct_roots(forms)) break;
  }
  BiconicModel model(forms, k);
  if (!(biconic_interval_image(model) == config)) {
    throw Error("ConstructionFailed", "constructed model does not reproduce the configuration");
  }
  return model;
}

IntervalConfig biconic_interval_image(const BiconicModel& m) {
  std::vector<ProjPoint> roots;
  for (const auto& f : m.forms())
    for (auto& r : real_roots(f)) roots.push_back(std::move(r));
  std::sort(roots.begin(), roots.end(), ProjPointLess{});
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  if (roots.empty()) {
    if (fibre_is_real(m, ProjPoint::finite(Rat(0)))) throw Error("WholeLine", "every fibre has real points");
    return {};
  }
  // Pieces around the circle: root_0, (root_0, root_1), root_1, ...
  const std::size_t n = roots.size();
  std::vector<bool> inside(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    inside[2 * i] = fibre_is_real(m, roots[i]);
    ProjPoint sample = ProjPoint::infinity();
    if (n == 1) {
      sample = roots[0].is_infinite() ? ProjPoint::finite(Rat(0)) : ProjPoint::finite(Rat(roots[0].value() + 1));
    } else {
      sample = Interval(roots[i], roots[(i + 1) % n]).interior_sample();
    }
    inside[2 * i + 1] = fibre_is_real(m, sample);
  }
  const auto outside = std::find(inside.begin(), inside.end(), false);
  if (outside == inside.end()) throw Error("WholeLine", "every fibre has real points");
  const std::size_t first_out = static_cast<std::size_t>(outside - inside.begin());

  std::vector<Interval> arcs;
  std::size_t run_start = 0;
  bool in_run = false;
  for (std::size_t step = 1; step <= 2 * n; ++step) {
    const std::size_t idx = (first_out + step) % (2 * n);
    if (inside[idx] && !in_run) {
      in_run = true;
      run_start = idx;
    } else if (!inside[idx] && in_run) {
      in_run = false;
      const std::size_t run_end = (idx + 2 * n - 1) % (2 * n);
      if (run_start % 2 != 0 || run_end % 2 != 0 || run_start == run_end) {
        throw Error("DegenerateImage", "real locus of the fibration is not a union of proper arcs");
      }
      arcs.emplace_back(roots[run_start / 2], roots[run_end / 2]);
    }
  }
  return IntervalConfig(std::move(arcs));
}

BiPoint geiser(const BiconicModel& m, const BiPoint& p) {
  if (!on_surface(m, p)) throw Error("NotOnSurface", "point " + to_string(p) + " is not on the model");
  const auto [A, B, C] = fiber_quadratic(m, p.xyz());
  if (A == 0 && B == 0 && C == 0) {
    throw Error("GeiserUndefined", "the whole line over " + to_string(p) + " lies on the surface");
  }
  // Factor A a^2 + B ab + C b^2 = (b0 a - a0 b)(u a + v b); the other root
  // is (v : -u).
  const Rat a0(p.t().u0());
  const Rat b0(p.t().u1());
  Rat u, v;
  if (b0 != 0) {
    u = A / b0;
    v = (B + a0 * u) / b0;
  } else {
    u = -B / a0;
    v = -C / a0;
  }
  const Rat den = u.get_den() * v.get_den();
  const Rat vi = v * den, ui = u * den;
  return BiPoint({Rat(p.xyz()[0]), Rat(p.xyz()[1]), Rat(p.xyz()[2])},
                 ProjPoint(vi.get_num(), Rat(-ui).get_num()));
}

ProjPoint second_fibration(const BiconicModel& m, const BiPoint& p) { return geiser(m, p).t(); }

bool is_ramification(const BiconicModel& m, const BiPoint& p) { return second_fibration(m, p) == p.t(); }

std::optional<BiPoint> find_fiber_point(const BiconicModel& m, const ProjPoint& t, const SearchBudget& budget) {
  std::array<Rat, 3> c;
  for (std::size_t j = 0; j < 3; ++j) c[j] = m.form(j)(t);
  for (std::size_t j = 0; j < 3; ++j) {
    if (c[j] == 0) {
      std::array<Rat, 3> e{Rat(0), Rat(0), Rat(0)};
      e[j] = 1;
      return BiPoint(e, t);
    }
  }
  for (long y = 0; y <= budget.coordinate_bound; ++y)
    for (long z = 0; z <= budget.coordinate_bound; ++z) {
      if (y == 0 && z == 0) continue;
      const Rat xx = -(c[1] * y * y + c[2] * z * z) / c[0];
      if (xx < 0) continue;
      if (auto x = exact_sqrt(xx)) return BiPoint({*x, Rat(y), Rat(z)}, t);
    }
  if (auto p = solve_diagonal_conic(c[0], c[1], c[2])) return BiPoint(*p, t);
  return std::nullopt;
}

std::vector<BiPoint> find_surface_points(const BiconicModel& m, std::size_t count, const SearchBudget& budget) {
  std::vector<BiPoint> out;
  const long n = budget.coordinate_bound;
  for (long x = 0; x <= n && out.size() < count; ++x)
    for (long y = 0; y <= n && out.size() < count; ++y)
      for (long z = 0; z <= n && out.size() < count; ++z) {
        if (std::gcd(std::gcd(x, y), z) != 1) continue;
        const std::array<Int, 3> xyz{Int(x), Int(y), Int(z)};
        const auto [A, B, C] = fiber_quadratic(m, xyz);
        if (A == 0 && B == 0 && C == 0) continue;
        const Rat disc = B * B - 4 * A * C;
        if (disc < 0) continue;
        const auto root = exact_sqrt(disc);
        if (!root) continue;
        std::vector<ProjPoint> ts;
        if (A == 0) {
          ts = {ProjPoint::infinity()};
          if (B != 0) ts.push_back(ProjPoint::finite(Rat(-C / B)));
        } else {
          ts = {ProjPoint::finite(Rat((-B + *root) / (2 * A))), ProjPoint::finite(Rat((-B - *root) / (2 * A)))};
        }
        for (const auto& t : ts) {
          if (std::any_of(m.forms().begin(), m.forms().end(), [&](const BinQuadForm& f) { return f(t) == 0; })) continue;
          BiPoint p({Rat(x), Rat(y), Rat(z)}, t);
          if (out.size() < count && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
        }
      }
  return out;
}

std::vector<BiPoint> fiber_points_from(const BiconicModel& m, const BiPoint& base, std::size_t count) {
  std::array<Rat, 3> c;
  for (std::size_t j = 0; j < 3; ++j) c[j] = m.form(j)(base.t());
  std::array<Rat, 3> p0;
  for (std::size_t j = 0; j < 3; ++j) p0[j] = Rat(base.xyz()[j]);

  std::vector<BiPoint> out{base};
  if (c[0] == 0 || c[1] == 0 || c[2] == 0) return out;
  for (long bound = 1; out.size() < count && bound <= 16; ++bound) {
    for (long d0 = -bound; d0 <= bound && out.size() < count; ++d0)
      for (long d1 = -bound; d1 <= bound && out.size() < count; ++d1)
        for (long d2 = -bound; d2 <= bound && out.size() < count; ++d2) {
          if (std::max({std::labs(d0), std::labs(d1), std::labs(d2)}) != bound) continue;
          const std::array<Rat, 3> d{Rat(d0), Rat(d1), Rat(d2)};
          Rat f = 0, b = 0;
          for (std::size_t j = 0; j < 3; ++j) {
            f += c[j] * d[j] * d[j];
            b += c[j] * p0[j] * d[j];
          }
          std::array<Rat, 3> q;
          for (std::size_t j = 0; j < 3; ++j) q[j] = f * p0[j] - 2 * b * d[j];
          if (q[0] == 0 && q[1] == 0 && q[2] == 0) continue;
          BiPoint candidate(q, base.t());
          if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(std::move(candidate));
        }
  }
  return out;
}

std::vector<ProjPoint> interior_parameters(const IntervalConfig& config, std::size_t count) {
  std::vector<ProjPoint> out;
  if (config.empty()) return out;
  for (const auto& arc : config.intervals()) {
    if (arc.contains_infinity() && !arc.start().is_infinite() && !arc.end().is_infinite()) {
      out.push_back(ProjPoint::infinity());
    }
  }
  Rat height = 2;
  for (const auto& p : config.boundary()) {
    if (!p.is_infinite()) height = std::max(height, Rat(abs(p.value()) + 2));
  }
  const Int bound = height.get_num() / height.get_den() + 1;
  auto strictly_inside = [&](const ProjPoint& t) {
    for (const auto& arc : config.intervals()) {
      if (arc.contains(t) && !(t == arc.start()) && !(t == arc.end())) return true;
    }
    return false;
  };
  for (long q = 1; q <= 256 && out.size() < count; ++q) {
    const Int limit = bound * q;
    for (Int p = -limit; p <= limit && out.size() < count; ++p) {
      const Rat t = make_rat(p, Int(q));
      if (t.get_den() != q) continue;
      const ProjPoint candidate = ProjPoint::finite(t);
      if (strictly_inside(candidate)) out.push_back(candidate);
    }
  }
  return out;
}

std::pair<BiPoint, BiPoint> distinct_foliations_witness(const BiconicModel& m, const SearchBudget& budget) {
  const IntervalConfig image = biconic_interval_image(m);
  if (m.k() == 0 || image.empty()) throw Error("NoRealPoints", "the model has no real fibres");
  auto witness_through = [&](const BiPoint& base) -> std::optional<std::pair<BiPoint, BiPoint>> {
    const auto points = fiber_points_from(m, base, 8);
    const ProjPoint first = second_fibration(m, points.front());
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (!(second_fibration(m, points[i]) == first)) return std::pair{points.front(), points[i]};
    }
    return std::nullopt;
  };
  for (const auto& t : interior_parameters(image, budget.max_fibres)) {
    const auto base = find_fiber_point(m, t, budget);
    if (!base) continue;
    if (auto w = witness_through(*base)) return *w;
  }
  for (const auto& base : find_surface_points(m, budget.max_fibres, budget)) {
    if (auto w = witness_through(base)) return *w;
  }
  throw Error("WitnessSearchFailed", "no witness within " + std::to_string(budget.max_fibres) +
                                         " fibres and coordinate bound " + std::to_string(budget.coordinate_bound));
}

}  // namespace rcb::delpezzo
