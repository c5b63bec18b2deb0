#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "rcb/conic_model.hpp"
#include "rcb/delpezzo.hpp"
#include "rcb/error.hpp"
#include "rcb/lattice.hpp"
#include "rcb/planner.hpp"
#include "rcb/projline.hpp"
#include "rcb/sampling.hpp"
#include "rcb/selftest.hpp"
#include "rcb/twist.hpp"
#include "support/oracles.hpp"

using namespace rcb;
using conic::ConicModel;
using conic::MarkedModel;
using conic::SurfPoint;
using projline::Interval;
using projline::IntervalConfig;
using projline::Moebius;
using projline::Permutation;
using projline::ProjPoint;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  std::size_t failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    std::string detail = summary + " checks=" + std::to_string(checks_) + " failures=" + std::to_string(failures_);
    if (!first_.empty()) detail += " first=" + first_;
    return {failures_ == 0, detail};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

Rat R(long n, long d = 1) { return make_rat(n, d); }

ProjPoint fin(const Rat& v) { return ProjPoint::finite(v); }

double eval_double(const RatPoly& p, double x) {
  double acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].get_d();
  return acc;
}

double sine_component(const twist::TwistMap& t, double x) {
  const double l = eval_double(t.lambda, x);
  const double cos_l = (1 - l * l) / (1 + l * l), sin_l = 2 * l / (1 + l * l);
  return t.base.s().get_d() * cos_l + t.base.c().get_d() * sin_l;
}

RatPoly defect(const RatPoly& lambda) {
  const RatPoly one({Rat(1)});
  const RatPoly sq = lambda * lambda;
  const RatPoly a = one - sq, b = Rat(2) * lambda, c = one + sq;
  return a * a + b * b - c * c;
}

// A random twist request on `m`: transported pairs on distinct smooth
// fibres and pins away from them.
struct TwistRequest {
  std::vector<twist::TransportPair> pairs;
  std::vector<Rat> pins;
};

TwistRequest random_request(sampling::Rng& rng, const ConicModel& m, long max_pairs, long max_pins) {
  TwistRequest req;
  std::vector<Rat> used;
  for (long k = sampling::uniform(rng, 0, max_pairs); k > 0; --k) {
    const auto p = sampling::random_surface_point(rng, m);
    if (!p || m.q_at(p->x) == 0 || std::count(used.begin(), used.end(), p->x)) continue;
    const auto [y, z] = sampling::random_rotation(rng).apply(p->y, p->z);
    req.pairs.push_back({*p, {p->x, y, z}});
    used.push_back(p->x);
  }
  for (long k = sampling::uniform(rng, 0, max_pins); k > 0; --k) {
    const auto p = sampling::random_surface_point(rng, m);
    if (!p || std::count(used.begin(), used.end(), p->x)) continue;
    req.pins.push_back(p->x);
    used.push_back(p->x);
  }
  return req;
}

Outcome twist_exactness() {
  sampling::Rng rng(101);
  Tally tally;
  std::size_t pairs = 0, pins = 0;
  for (int i = 0; i < 100; ++i) {
    const auto m = sampling::random_model(rng, static_cast<std::size_t>(sampling::uniform(rng, 1, 3)));
    const auto req = random_request(rng, m, 6, 3);
    const auto t = twist::synthesize_twist(m, req.pairs, req.pins);
    for (const auto& [p, q] : req.pairs) tally.check(twist::apply_twist(m, t, p) == q, "transport");
    for (const auto& b : req.pins) {
      const auto base = conic::fiber_point(m, b);
      tally.check(base.has_value(), "pinned fibre point");
      if (!base) continue;
      const auto circle = conic::fiber_circle_points(*base, 5);
      tally.check(circle.size() == 5 || m.q_at(b) == 0, "five pinned samples");
      for (const auto& s : circle) tally.check(twist::apply_twist(m, t, s) == s, "pinned fibre fixed");
    }
    for (int k = 0; k < 5; ++k) {
      const auto p = sampling::random_surface_point(rng, m);
      if (p) tally.check(conic::on_surface(m, twist::apply_twist(m, t, *p)), "surface preserved");
    }
    pairs += req.pairs.size();
    pins += req.pins.size();
  }
  return tally.outcome("instances=100 pairs=" + std::to_string(pairs) + " pins=" + std::to_string(pins));
}

Outcome orthogonality() {
  sampling::Rng rng(102);
  Tally tally;
  for (int i = 0; i < 100; ++i) {
    const auto m = sampling::random_model(rng, static_cast<std::size_t>(sampling::uniform(rng, 1, 3)));
    const auto req = random_request(rng, m, 6, 3);
    const auto t = twist::synthesize_twist(m, req.pairs, req.pins);
    tally.check(defect(t.lambda).is_zero(), "defect polynomial");
    tally.check(twist::orthogonality_defect(t.lambda).is_zero(), "library defect");
  }
  return tally.outcome("interpolants=100");
}

Outcome jet_control() {
  sampling::Rng rng(103);
  Tally tally;
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const auto m = sampling::random_model(rng, static_cast<std::size_t>(sampling::uniform(rng, 1, 3)));
    auto req = random_request(rng, m, 3, 0);
    std::vector<twist::JetRequest> jets;
    for (long k = sampling::uniform(rng, 1, 2); k > 0 || jets.empty(); --k) {
      const std::size_t c = static_cast<std::size_t>(sampling::uniform(rng, 0, static_cast<long>(m.components()) - 1));
      const Rat lo = m.roots()[2 * c], hi = m.roots()[2 * c + 1];
      const Rat x = lo + (hi - lo) * make_rat(sampling::uniform(rng, 1, 6), 7);
      const bool clash = std::any_of(req.pairs.begin(), req.pairs.end(), [&](const auto& p) { return p.from.x == x; }) ||
                         std::any_of(jets.begin(), jets.end(), [&](const auto& j) { return j.x == x; });
      if (clash) continue;
      Rat mu = sampling::random_rat(rng, 5, 4);
      if (mu == 0) mu = 1;
      jets.push_back({x, mu});
    }
    const auto t = twist::synthesize_twist(m, req.pairs, {}, jets);
    for (const auto& [p, q] : req.pairs) tally.check(twist::apply_twist(m, t, p) == q, "transport with jets");
    for (const auto& jet : jets) {
      tally.check(t.rotation_at(jet.x) == twist::Rotation::identity(), "jet fibre fixed");
      const Rat kappa = twist::tangent_coefficient(t, jet.x);
      tally.check(kappa == 2 * jet.mu, "exact tangent coefficient");
      const double h = 1e-6, x0 = jet.x.get_d();
      const double fd = (sine_component(t, x0 + h) - sine_component(t, x0 - h)) / (2 * h);
      const double rel = std::abs(fd - kappa.get_d()) / std::abs(kappa.get_d());
      worst = std::max(worst, rel);
      tally.check(rel <= 1e-3, "finite difference");
    }
  }
  std::ostringstream s;
  s << "instances=20 worst_relative=" << worst;
  return tally.outcome(s.str());
}

IntervalConfig image_config(const Moebius& g, const IntervalConfig& c) {
  std::vector<Interval> arcs;
  for (const auto& arc : c.intervals()) arcs.push_back(projline::interval_image(g, arc));
  return IntervalConfig(std::move(arcs));
}

std::set<Permutation> perms_of(const std::vector<projline::ConfigMatch>& matches) {
  std::set<Permutation> out;
  for (const auto& m : matches) out.insert(m.perm);
  return out;
}

Outcome equivalence_decision() {
  sampling::Rng rng(104);
  Tally tally;
  std::size_t equivalent = 0;
  for (int i = 0; i < 200; ++i) {
    const auto r = static_cast<std::size_t>(sampling::uniform(rng, 1, 4));
    const IntervalConfig a = sampling::random_config(rng, r, sampling::uniform(rng, 0, 1) == 1);
    const IntervalConfig b = sampling::uniform(rng, 0, 1) == 1
                                 ? image_config(sampling::random_moebius(rng), a)
                                 : sampling::random_config(rng, r, sampling::uniform(rng, 0, 1) == 1);
    const auto expected = oracle::realized_permutations_all_triples(a, b);
    const auto found = projline::config_equiv(a, b);
    tally.check(found.has_value() == !expected.empty(), "decision agrees with oracle");
    if (found) {
      ++equivalent;
      tally.check(projline::verify_match(a, b, found->map, found->perm), "witness re-validates");
    }
    const auto all = projline::config_matches(a, b);
    tally.check(perms_of(all) == expected, "permutation sets agree");
    for (const auto& m : all) tally.check(projline::verify_match(a, b, m.map, m.perm), "every match re-validates");
  }
  return tally.outcome("configs=200 equivalent=" + std::to_string(equivalent));
}

Outcome two_interval_realizability() {
  sampling::Rng rng(105);
  Tally tally;
  const Permutation swap{1, 0};
  for (int i = 0; i < 100; ++i) {
    const IntervalConfig c = sampling::random_config(rng, 2, sampling::uniform(rng, 0, 1) == 1);
    const auto perms = perms_of(projline::realizable_permutations(c));
    tally.check(perms.count(swap) == 1, "transposition realizable");

    // Normalize: I1 -> [0, 1] and the far end of I2 -> infinity.
    const Moebius n = projline::moebius_from_triples(c[0].start(), c[0].end(), c[1].end(), fin(Rat(0)), fin(Rat(1)),
                                                     ProjPoint::infinity());
    const IntervalConfig normal = image_config(n, c);
    tally.check(normal[0] == Interval(fin(Rat(0)), fin(Rat(1))), "first arc normalized");
    tally.check(normal[1].end().is_infinite(), "infinity bounds the second arc");
    const Rat lambda = normal[1].start().value();
    const Moebius family(Rat(0), lambda, Rat(1), Rat(0));
    tally.check(projline::verify_match(normal, normal, family, swap), "normalized witness");
    const Moebius back = n.inverse().compose(family).compose(n);
    tally.check(projline::verify_match(c, c, back, swap), "pulled-back witness");
  }
  return tally.outcome("configs=100");
}

Outcome generic_rigidity() {
  sampling::Rng rng(106);
  Tally tally;
  int trivial = 0;
  for (int i = 0; i < 100; ++i) {
    const IntervalConfig c = sampling::random_finite_config(rng, 3);
    const auto boundary = c.boundary();
    const auto stab = projline::stabilizer(boundary);
    const auto perms = perms_of(projline::realizable_permutations(c));
    if (stab.size() == 1 && perms == std::set<Permutation>{{0, 1, 2}}) {
      ++trivial;
    } else {
      tally.check(oracle::stabilizer_order(boundary) == stab.size(), "stabilizer re-verified");
      tally.check(oracle::realized_permutations_all_triples(c, c) == perms, "permutations re-verified");
    }
  }
  tally.check(trivial >= 95, "at least 95 rigid configs");
  return tally.outcome("configs=100 trivial=" + std::to_string(trivial));
}

std::vector<SurfPoint> smooth_points(const ConicModel& m, std::size_t i, std::size_t count) {
  const Rat lo = m.roots()[2 * i], hi = m.roots()[2 * i + 1];
  std::vector<SurfPoint> out;
  for (long d = 2; out.size() < count && d < 400; ++d)
    for (long k = 1; k < d && out.size() < count; ++k) {
      if (std::gcd(k, d) != 1) continue;
      if (auto p = conic::fiber_point(m, lo + (hi - lo) * make_rat(k, d))) out.push_back(*p);
    }
  return out;
}

MarkedModel fixture(const std::vector<Rat>& roots, const std::vector<std::size_t>& counts) {
  const ConicModel m(roots);
  std::vector<SurfPoint> marks;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    std::vector<SurfPoint> pool{{m.roots()[2 * i], 0, 0}, {m.roots()[2 * i + 1], 0, 0}};
    if (counts[i] > 2) {
      for (auto& p : smooth_points(m, i, counts[i] - 2)) pool.push_back(std::move(p));
    }
    for (std::size_t j = 0; j < counts[i]; ++j) marks.push_back(pool.at(j));
  }
  return MarkedModel(m, std::move(marks));
}

std::vector<Rat> ints(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Outcome decision_table() {
  struct Row {
    std::string name;
    std::vector<Rat> roots;
    std::vector<std::size_t> counts;
    bool verdict;
    std::string rule;
  };
  // {[-2,-1/2], [1/3,2/3], [3/2,3]} is one orbit of the six maps permuting
  // 0, 1 and infinity, so every permutation of its arcs is realized.
  const std::vector<Rat> symmetric{R(-2), R(-1, 2), R(1, 3), R(2, 3), R(3, 2), R(3)};
  // x -> 3 - x swaps the outer arcs and keeps the middle one.
  const std::vector<Rat> mirror{R(0), R(1), R(5, 4), R(7, 4), R(2), R(3)};
  const std::vector<Rat> rigid = ints({0, 1, 3, 7, 8, 12});
  const std::vector<Row> rows{
      {"r1-unmarked", ints({0, 1}), {0}, true, "thm1.2(2a)"},
      {"r1-three-marks", ints({0, 1}), {3}, true, "thm1.2(2a)"},
      {"r2-equal", ints({0, 1, 2, 3}), {1, 1}, true, "thm1.2(2a)"},
      {"r2-unequal", ints({0, 1, 2, 3}), {3, 0}, true, "thm1.2(2a)"},
      {"r3-distinct-012", rigid, {0, 1, 2}, true, "thm1.2(2b)"},
      {"r3-distinct-123", mirror, {1, 2, 3}, true, "thm1.2(2b)"},
      {"r3-pair-mirrored", mirror, {1, 0, 1}, true, "thm1.2(2c)"},
      {"r3-pair-rigid", rigid, {1, 1, 0}, false, "thm1.2(2c)"},
      {"r3-all-symmetric", symmetric, {1, 1, 1}, true, "thm1.2(2d)"},
      {"r3-all-rigid", rigid, {0, 0, 0}, false, "thm1.2(2d)"},
      {"r4-unmarked", ints({0, 1, 2, 3, 4, 5, 6, 7}), {0, 0, 0, 0}, false, "thm1.2-more-than-3"},
      {"r4-distinct", ints({0, 1, 2, 3, 4, 5, 6, 7}), {0, 1, 2, 3}, false, "thm1.2-more-than-3"},
  };
  Tally tally;
  for (const auto& row : rows) {
    const auto v = conic::decide_very_transitive(fixture(row.roots, row.counts));
    tally.check(v.very_transitive == row.verdict, row.name + " verdict");
    tally.check(v.rule == row.rule, row.name + " rule");
    tally.check(v.componentwise == (row.roots.size() <= 6), row.name + " componentwise");
    if (!row.verdict) tally.check(!v.failure.empty(), row.name + " failure reason");
    const IntervalConfig c = conic::interval_image(ConicModel(row.roots));
    for (const auto& w : v.witnesses) tally.check(projline::verify_match(c, c, w.map, w.perm), row.name + " witness");
  }
  return tally.outcome("fixtures=" + std::to_string(rows.size()));
}

Outcome geiser_involution() {
  using namespace delpezzo;
  sampling::Rng rng(108);
  Tally tally;
  std::size_t points = 0;
  const std::vector<std::size_t> ks{1, 2, 3, 1, 2};
  for (std::size_t k : ks) {
    const BiconicModel m = biconic_from_config(sampling::random_finite_config(rng, k));
    const auto sample = sampling::random_biconic_points(rng, m, 100);
    tally.check(sample.size() == 100, "100 points");
    for (const auto& p : sample) {
      tally.check(on_surface(m, p), "sample on surface");
      const BiPoint q = geiser(m, p);
      tally.check(on_surface(m, q), "membership preserved");
      tally.check(q.xyz() == p.xyz(), "plane coordinate preserved");
      tally.check(geiser(m, q) == p, "involution");
      tally.check(is_ramification(m, p) == (q == p), "fixed exactly on ramification");
      ++points;
    }
  }
  const BiconicModel unit = biconic_from_config(IntervalConfig({Interval(fin(Rat(0)), fin(Rat(1)))}));
  const BiPoint worked({Rat(3), Rat(0), Rat(1)}, ProjPoint(Int(1), Int(2)));
  tally.check(geiser(unit, worked) == BiPoint({Rat(3), Rat(0), Rat(1)}, ProjPoint(Int(2), Int(5))), "worked example");

  const BiconicModel ram({BinQuadForm{Rat(-1), Rat(1), Rat(0)}, definite_form(1), BinQuadForm{Rat(3), Rat(-1), Rat(1)}},
                         1);
  const BiPoint fixed({Rat(1), Rat(1), Rat(1)}, ProjPoint(Int(0), Int(1)));
  tally.check(on_surface(ram, fixed) && is_ramification(ram, fixed) && geiser(ram, fixed) == fixed,
              "ramification point fixed");
  return tally.outcome("models=5 points=" + std::to_string(points));
}

Outcome biconic_round_trip() {
  sampling::Rng rng(109);
  Tally tally;
  for (std::size_t k = 0; k <= 3; ++k) {
    for (int i = 0; i < 20; ++i) {
      const IntervalConfig c = sampling::random_finite_config(rng, k);
      const auto m = delpezzo::biconic_from_config(c);
      tally.check(delpezzo::biconic_interval_image(m) == c, "round trip");
      tally.check(delpezzo::has_distinct_roots(m.forms()), "six distinct roots");
    }
  }
  return tally.outcome("configs=80");
}

Outcome lattice_suite() {
  using namespace lattice;
  Tally tally;
  for (std::size_t n : {5, 6, 7}) {
    auto listed = exceptional_classes(n);
    std::sort(listed.begin(), listed.end());
    tally.check(listed == oracle::exceptional_by_search(n, 4), "classes match brute force");
  }
  tally.check(exceptional_classes(5).size() == 16 && exceptional_classes(6).size() == 27 &&
                  exceptional_classes(7).size() == 56,
              "counts 16 27 56");
  const ClassPerm s = deg4_sigma(), a = deg4_alpha();
  for (const ClassPerm* p : {&s, &a}) {
    tally.check(is_involution(*p), "involution");
    tally.check(is_fixed_point_free(*p), "fixed point free");
    tally.check(perm_preserves_form(*p), "form preserving");
  }
  tally.check(perms_commute(s, a), "sigma and alpha commute");

  const PicVector k7 = PicVector::canonical(7);
  tally.check(geiser_reflection(k7) == k7, "reflection fixes K");
  const auto classes = exceptional_classes(7);
  const std::set<PicVector> class_set(classes.begin(), classes.end());
  for (const auto& d : classes) {
    const PicVector r = geiser_reflection(d);
    tally.check(geiser_reflection(r) == d, "reflection involutive");
    tally.check(class_set.count(r) == 1, "reflection permutes classes");
    for (const auto& c : classes) tally.check(intersect(r, geiser_reflection(c)) == intersect(d, c), "isometry");
  }
  for (std::size_t n : {5, 7}) {
    std::vector<long> coords(n + 1, 0);
    coords[0] = 1;
    coords[1] = -1;
    const PicVector f1(coords);
    const PicVector f2 = conic_fiber_partner(n, f1);
    const PicVector k = PicVector::canonical(n);
    const long c = 4 / intersect(k, k);
    tally.check(f1 + f2 == -(c * k), "f1 + f2 = -cK");
    tally.check(intersect(f2, f2) == 0 && intersect(f2, k) == -2, "partner is a fibre class");
    if (n == 7) tally.check(geiser_reflection(f1) == f2, "reflection swaps fibre partners");
  }
  return tally.outcome("degrees=4,3,2");
}

Outcome planner_oracle() {
  sampling::Rng rng(111);
  Tally tally;
  std::size_t connected = 0;
  for (int i = 0; i < 200; ++i) {
    const auto region = sampling::random_region(rng, 5, 8);
    const auto s = sampling::random_region_point(rng, region);
    const auto e = sampling::random_region_point(rng, region);
    planner::Forbidden forbidden;
    for (long k = sampling::uniform(rng, 0, 2); k > 0; --k) {
      const Rat v = make_rat(sampling::uniform(rng, 0, 16), 2);
      if (v != s.x && v != e.x) forbidden.x.push_back(v);
    }
    for (long k = sampling::uniform(rng, 0, 2); k > 0; --k) {
      const Rat v = make_rat(sampling::uniform(rng, 0, 16), 2);
      if (v != s.y && v != e.y) forbidden.y.push_back(v);
    }
    const auto path = planner::find_rect_path(region, s, e, forbidden);
    tally.check(path.has_value() == oracle::grid_connected(region, s, e, forbidden), "reachability agrees");
    if (path) {
      ++connected;
      tally.check(planner::validate_path(region, *path, s, e, forbidden), "path validates");
    }
  }
  return tally.outcome("instances=200 connected=" + std::to_string(connected));
}

Outcome determinism() {
  Tally tally;
  const auto first = run_selftest(1);
  const auto second = run_selftest(1);
  tally.check(first.ok && second.ok, "selftest passes");
  tally.check(first.text == second.text, "byte-identical reports");
  return tally.outcome("bytes=" + std::to_string(first.text.size()));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"twist-exactness", twist_exactness},
      {"orthogonality-identity", orthogonality},
      {"jet-control", jet_control},
      {"interval-equivalence", equivalence_decision},
      {"two-interval-realizability", two_interval_realizability},
      {"generic-three-interval-rigidity", generic_rigidity},
      {"very-transitivity-table", decision_table},
      {"geiser-involution", geiser_involution},
      {"biconic-round-trip", biconic_round_trip},
      {"lattice-suite", lattice_suite},
      {"planner-oracle", planner_oracle},
      {"selftest-determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
