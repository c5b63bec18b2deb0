#include "rcb/selftest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rcb/error.hpp"
#include "rcb/lattice.hpp"
#include "rcb/sampling.hpp"

namespace rcb {

namespace {

using sampling::Rng;
using sampling::uniform;

struct Suite {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string trace;

  void check(bool ok, const std::string& detail) {
    ++cases;
    trace += detail;
    trace += ok ? ";" : "!;";
    if (!ok) ++failures;
  }
};

Suite moebius_laws(Rng& rng) {
  Suite s{"moebius.group_laws"};
  for (int i = 0; i < 200; ++i) {
    const auto m1 = sampling::random_moebius(rng);
    const auto m2 = sampling::random_moebius(rng);
    const auto p = sampling::random_point(rng);
    const bool action = projline::moebius_apply(m1.compose(m2), p) ==
                        projline::moebius_apply(m1, projline::moebius_apply(m2, p));
    const bool inverse = m1.compose(m1.inverse()) == projline::Moebius::identity();
    s.check(action && inverse, projline::to_string(m1.compose(m2)));
  }
  return s;
}

Suite cross_ratio_invariance(Rng& rng) {
  Suite s{"projline.cross_ratio_invariance"};
  while (s.cases < 200) {
    std::vector<projline::ProjPoint> p;
    for (int k = 0; k < 4; ++k) p.push_back(sampling::random_point(rng));
    if (p[0] == p[1] || p[0] == p[2] || p[1] == p[2]) continue;
    const auto m = sampling::random_moebius(rng);
    std::vector<projline::ProjPoint> q;
    for (const auto& x : p) q.push_back(projline::moebius_apply(m, x));
    const auto before = projline::cross_ratio(p[0], p[1], p[2], p[3]);
    s.check(before == projline::cross_ratio(q[0], q[1], q[2], q[3]), projline::to_string(before));
  }
  return s;
}

Suite config_equivalence(Rng& rng) {
  Suite s{"projline.config_equiv_soundness"};
  for (int i = 0; i < 100; ++i) {
    const auto r = static_cast<std::size_t>(uniform(rng, 1, 4));
    const auto c = sampling::random_config(rng, r, uniform(rng, 0, 1) == 1);
    const auto m = sampling::random_moebius(rng);
    std::vector<projline::Interval> moved;
    for (const auto& arc : c.intervals()) moved.push_back(projline::interval_image(m, arc));
    const projline::IntervalConfig image(std::move(moved));
    const auto self = projline::config_equiv(c, c, projline::identity_permutation(r));
    const auto match = projline::config_equiv(c, image);
    const bool ok = self && match && projline::verify_match(c, image, match->map, match->perm);
    s.check(ok, match ? projline::to_string(match->map) : "none");
  }
  return s;
}

Suite conic_round_trip(Rng& rng) {
  Suite s{"conic.round_trip"};
  for (int i = 0; i < 100; ++i) {
    const auto m = sampling::random_model(rng, static_cast<std::size_t>(uniform(rng, 1, 4)));
    const auto config = conic::interval_image(m);
    s.check(conic::model_from_config(config) == m, std::to_string(config.size()));
  }
  return s;
}

Suite twist_transport(Rng& rng) {
  Suite s{"twist.transport"};
  for (int i = 0; i < 40; ++i) {
    const auto m = sampling::random_model(rng, static_cast<std::size_t>(uniform(rng, 1, 3)));
    std::vector<twist::TransportPair> pairs;
    std::vector<Rat> xs;
    const long n = uniform(rng, 0, 3);
    for (long k = 0; k < n; ++k) {
      const auto p = sampling::random_surface_point(rng, m);
      if (!p || m.q_at(p->x) == 0 || std::find(xs.begin(), xs.end(), p->x) != xs.end()) continue;
      const auto [y, z] = sampling::random_rotation(rng).apply(p->y, p->z);
      pairs.push_back({*p, {p->x, y, z}});
      xs.push_back(p->x);
    }
    std::vector<Rat> pins;
    for (const auto& root : m.roots()) {
      if (uniform(rng, 0, 2) == 0 && std::find(xs.begin(), xs.end(), root) == xs.end()) pins.push_back(root);
    }
    const auto t = twist::synthesize_twist(m, pairs, pins);
    bool ok = twist::verify_twist(m, t).ok();
    for (const auto& [p, q] : pairs) ok = ok && twist::apply_twist(m, t, p) == q;
    for (const auto& b : pins) ok = ok && t.rotation_at(b) == twist::Rotation::identity();
    std::string detail;
    for (const auto& c : t.lambda.coeffs()) detail += to_string(c) + ",";
    s.check(ok, detail);
  }
  return s;
}

Suite geiser_involution(Rng& rng) {
  Suite s{"delpezzo.geiser_involution"};
  for (int i = 0; i < 10; ++i) {
    const auto c = sampling::random_finite_config(rng, static_cast<std::size_t>(uniform(rng, 1, 3)));
    const auto m = delpezzo::biconic_from_config(c);
    for (const auto& p : sampling::random_biconic_points(rng, m, 5)) {
      const auto g = delpezzo::geiser(m, p);
      const bool ok = delpezzo::on_surface(m, g) && g.xyz() == p.xyz() && delpezzo::geiser(m, g) == p;
      s.check(ok, delpezzo::to_string(g));
    }
  }
  return s;
}

Suite lattice_identities() {
  using namespace lattice;
  Suite s{"lattice.identities"};
  const std::size_t expected[] = {0, 1, 3, 6, 10, 16, 27, 56};
  for (std::size_t n = 1; n <= 7; ++n) s.check(exceptional_classes(n).size() == expected[n], std::to_string(n));
  const auto sigma = deg4_sigma();
  const auto alpha = deg4_alpha();
  s.check(is_involution(sigma) && is_fixed_point_free(sigma) && perm_preserves_form(sigma), "sigma");
  s.check(is_involution(alpha) && is_fixed_point_free(alpha) && perm_preserves_form(alpha), "alpha");
  s.check(perms_commute(sigma, alpha), "commute");
  const auto K = PicVector::canonical(7);
  bool reflection = geiser_reflection(K) == K;
  for (const auto& d : exceptional_classes(7)) reflection = reflection && geiser_reflection(geiser_reflection(d)) == d;
  s.check(reflection, "reflection");
  return s;
}

Suite planner_paths(Rng& rng) {
  Suite s{"planner.validated_paths"};
  for (int i = 0; i < 100; ++i) {
    const auto region = sampling::random_region(rng, 4, 8);
    const auto a = sampling::random_region_point(rng, region);
    const auto b = sampling::random_region_point(rng, region);
    planner::Forbidden forbidden;
    for (long v = 0; v <= 8; ++v) {
      const Rat line = make_rat(2 * v + 1, 4);
      if (uniform(rng, 0, 5) == 0) forbidden.x.push_back(line);
      if (uniform(rng, 0, 5) == 0) forbidden.y.push_back(line);
    }
    const auto path = planner::find_rect_path(region, a, b, forbidden);
    const bool ok = !path || planner::validate_path(region, *path, a, b, forbidden);
    s.check(ok, path ? std::to_string(path->segments.size()) : "none");
  }
  return s;
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
  const std::vector<std::function<Suite(Rng&)>> suites = {
      moebius_laws,    cross_ratio_invariance, config_equivalence, conic_round_trip,
      twist_transport, geiser_involution,      [](Rng&) { return lattice_identities(); },
      planner_paths,
  };
  SelftestReport report;
  std::ostringstream text;
  text << "selftest seed=" << seed << "\n";
  for (std::size_t i = 0; i < suites.size(); ++i) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
    Suite s;
    try {
      s = suites[i](rng);
    } catch (const Error& e) {
      s.name = "suite" + std::to_string(i);
      s.failures = s.cases + 1;
      s.trace = e.what();
      text << "error in suite " << i << ": " << e.what() << "\n";
    }
    report.ok = report.ok && s.failures == 0;
    text << (s.failures == 0 ? "PASS " : "FAIL ") << s.name << " cases=" << s.cases << " failures=" << s.failures
         << " digest=" << std::hex << std::hash<std::string>{}(s.trace) << std::dec << "\n";
  }
  text << (report.ok ? "all suites passed" : "some suites failed") << "\n";
  report.text = text.str();
  return report;
}

}  // namespace rcb
