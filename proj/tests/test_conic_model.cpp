#include <doctest.h>

#include <numeric>

#include "rcb/conic_model.hpp"
#include "rcb/error.hpp"
#include "rcb/sampling.hpp"
#include "support/oracles.hpp"

using namespace rcb;
using namespace rcb::conic;
using projline::Interval;
using projline::IntervalConfig;
using projline::Permutation;
using projline::ProjPoint;

namespace {

Rat R(long n, long d = 1) { return make_rat(n, d); }
ProjPoint P(long n, long d = 1) { return ProjPoint::finite(make_rat(n, d)); }

ConicModel model(std::initializer_list<long> roots) {
  std::vector<Rat> v;
  for (long r : roots) v.push_back(Rat(r));
  return ConicModel(std::move(v));
}

IntervalConfig config(std::initializer_list<std::pair<long, long>> arcs) {
  std::vector<Interval> out;
  for (const auto& [s, e] : arcs) out.emplace_back(P(s), P(e));
  return IntervalConfig(std::move(out));
}

/// Rational points over the interior of arc i, smallest denominators first.
std::vector<SurfPoint> smooth_points(const ConicModel& m, std::size_t i, std::size_t count) {
  const Rat lo = m.roots()[2 * i], hi = m.roots()[2 * i + 1];
  std::vector<SurfPoint> out;
  for (long d = 2; out.size() < count && d < 400; ++d)
    for (long k = 1; k < d && out.size() < count; ++k) {
      if (std::gcd(k, d) != 1) continue;
      if (auto p = fiber_point(m, lo + (hi - lo) * make_rat(k, d))) out.push_back(*p);
    }
  return out;
}

/// Marks on the singular fibres over the ends of arc i first, then on
/// smooth fibres.
MarkedModel marked(const ConicModel& m, const std::vector<std::size_t>& counts) {
  std::vector<SurfPoint> marks;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const Rat lo = m.roots()[2 * i], hi = m.roots()[2 * i + 1];
    std::vector<SurfPoint> pool{{lo, 0, 0}, {hi, 0, 0}};
    if (counts[i] > 2) {
      for (auto& p : smooth_points(m, i, counts[i] - 2)) pool.push_back(std::move(p));
    }
    REQUIRE(pool.size() >= counts[i]);
    for (std::size_t j = 0; j < counts[i]; ++j) marks.push_back(pool[j]);
  }
  return MarkedModel(m, std::move(marks));
}

}  // namespace

TEST_CASE("model construction validates roots") {
  const ConicModel m = model({0, 1});
  CHECK(m.q() == RatPoly({Rat(0), Rat(1), Rat(-1)}));
  CHECK_THROWS_AS(model({0}), Error);
  CHECK_THROWS_AS(model({1, 0}), Error);
  CHECK_THROWS_AS(model({0, 0, 1, 2}), Error);
}

TEST_CASE("model_from_config") {
  const ConicModel m = model_from_config(config({{0, 1}}));
  CHECK(m.roots() == std::vector<Rat>{0, 1});
  CHECK(m.q_at(R(1, 2)) == R(1, 4));
  CHECK(m.q_at(Rat(2)) == Rat(-2));
  CHECK(model_from_config(config({{0, 1}, {2, 3}})).roots() == std::vector<Rat>{0, 1, 2, 3});
  CHECK(model_from_config(config({{0, 1}, {2, 3}, {4, 5}})).roots().size() == 6);
  CHECK_THROWS_WITH_AS(model_from_config(IntervalConfig({Interval(P(5), P(1))})), doctest::Contains("MoveInfinityFirst"),
                       Error);
  CHECK_THROWS_AS(model_from_config(IntervalConfig({Interval(P(1), ProjPoint::infinity())})), Error);
}

TEST_CASE("interval_image and the sign law") {
  CHECK(interval_image(model({0, 1})) == config({{0, 1}}));
  CHECK(interval_image(model({0, 1, 2, 3})) == config({{0, 1}, {2, 3}}));
  sampling::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto m = sampling::random_model(rng, static_cast<std::size_t>(sampling::uniform(rng, 1, 4)));
    const auto& a = m.roots();
    // gaps: (-inf, a1), (a1, a2), ..., (a_2r, inf); sample each one
    std::vector<Rat> samples{a.front() - 1};
    for (std::size_t k = 0; k + 1 < a.size(); ++k) samples.push_back(midpoint(a[k], a[k + 1]));
    samples.push_back(a.back() + 1);
    for (std::size_t k = 0; k < samples.size(); ++k) {
      REQUIRE(sign(m.q_at(samples[k])) == (k % 2 == 1 ? 1 : -1));
    }
    const auto image = interval_image(m);
    for (std::size_t k = 0; k < samples.size(); ++k) {
      REQUIRE(image.locate(ProjPoint::finite(samples[k])).has_value() == (k % 2 == 1));
    }
    REQUIRE(model_from_config(image) == m);
  }
}

TEST_CASE("on_surface") {
  const auto m = model({0, 1});
  CHECK(on_surface(m, {R(1, 2), R(1, 2), 0}));
  CHECK_FALSE(on_surface(m, {R(1, 2), R(1, 2), R(1, 2)}));
  CHECK(on_surface(model({-3, 2, 5, 9}), {Rat(-3), 0, 0}));
}

TEST_CASE("scaling_iso") {
  const auto m = model({0, 1});
  const auto same = scaling_iso(m, m.q());
  CHECK(same.lambda() == 1);
  CHECK(same.is_exact());
  const auto four = scaling_iso(m, Rat(4) * m.q());
  REQUIRE(four.root());
  CHECK(*four.root() == 2);
  const SurfPoint p{R(1, 2), R(1, 2), 0};
  const SurfPoint image = four.apply(p);
  CHECK(image == SurfPoint{R(1, 2), 1, 0});
  CHECK(image.y * image.y + image.z * image.z == Rat(4) * m.q_at(image.x));
  const auto two = scaling_iso(m, Rat(2) * m.q());
  CHECK(two.lambda() == 2);
  CHECK_FALSE(two.is_exact());
  CHECK_THROWS_WITH_AS(two.apply(p), doctest::Contains("SymbolicOnly"), Error);
  CHECK_THROWS_WITH_AS(scaling_iso(m, Rat(-1) * m.q()), doctest::Contains("NotProportional"), Error);
  CHECK_THROWS_AS(scaling_iso(m, m.q() + RatPoly::constant(Rat(1))), Error);
}

TEST_CASE("component_index") {
  const auto m = model({0, 1, 2, 3});
  CHECK(component_index(m, smooth_points(m, 0, 1).front()) == 0);
  CHECK(component_index(m, {Rat(2), 0, 0}) == 1);
  // 15/16 is not a sum of two rational squares, so the fibre over 5/2 has
  // no rational point; a nearby fibre stands in for it.
  CHECK(m.q_at(R(5, 2)) == R(15, 16));
  CHECK_FALSE(fiber_point(m, R(5, 2)));
  const auto near = smooth_points(m, 1, 1);
  REQUIRE(near.size() == 1);
  CHECK(component_index(m, near.front()) == 1);
  CHECK_THROWS_WITH_AS(component_index(m, {R(1, 2), 1, 1}), doctest::Contains("NotOnSurface"), Error);
}

TEST_CASE("marked models and component types") {
  const auto m2 = model({0, 1, 2, 3});
  CHECK_THROWS_AS(MarkedModel(m2, {{R(1, 2), 1, 1}}), Error);
  CHECK_THROWS_AS(MarkedModel(m2, {{Rat(0), 0, 0}, {Rat(0), 0, 0}}), Error);
  auto names = [](const MarkedModel& mm) {
    std::vector<std::string> out;
    for (const auto& t : marked_homeo_types(mm)) out.push_back(t.name());
    return out;
  };
  CHECK(names(marked(m2, {0, 0})) == std::vector<std::string>{"S2", "S2"});
  CHECK(names(marked(m2, {1, 0})) == std::vector<std::string>{"N1", "S2"});
  CHECK(names(marked(model({0, 1, 2, 3, 4, 5}), {2, 0, 0})) == std::vector<std::string>{"N2", "S2", "S2"});
}

TEST_CASE("decide_birational") {
  const auto a = model({0, 1, 2, 3});
  const auto self = decide_birational(a, a);
  REQUIRE(self);
  CHECK(self->map == projline::Moebius::identity());
  const auto shifted = decide_birational(a, model({5, 6, 7, 8}));
  REQUIRE(shifted);
  CHECK(shifted->map == projline::Moebius(1, 5, 0, 1));
  const auto b = model({0, 1, 2, 4});
  CHECK(decide_birational(a, b).has_value() ==
        !oracle::realized_permutations(interval_image(a), interval_image(b)).empty());
}

TEST_CASE("decide_birational is an equivalence relation on samples") {
  sampling::Rng rng(8);
  for (int i = 0; i < 40; ++i) {
    const auto r = static_cast<std::size_t>(sampling::uniform(rng, 1, 3));
    const auto a = sampling::random_model(rng, r);
    // b is a translate-and-scale of a, c a random model
    const Rat shift = sampling::random_rat(rng, 5, 3);
    std::vector<Rat> moved;
    for (const auto& x : a.roots()) moved.push_back(Rat(2) * x + shift);
    const ConicModel b(moved);
    const auto c = sampling::random_model(rng, r);
    REQUIRE(decide_birational(a, a));
    const auto ab = decide_birational(a, b);
    REQUIRE(ab);
    const auto ba = decide_birational(b, a);
    REQUIRE(ba);
    CHECK(projline::verify_match(interval_image(b), interval_image(a), ab->map.inverse(), projline::inverse(ab->perm)));
    const auto bc = decide_birational(b, c);
    CHECK(bc.has_value() == decide_birational(a, c).has_value());
    if (bc) {
      CHECK(projline::verify_match(interval_image(a), interval_image(c), bc->map.compose(ab->map),
                                   projline::compose(bc->perm, ab->perm)));
    }
  }
}

TEST_CASE("decide_marked_iso") {
  const auto m2 = model({0, 1, 2, 3});
  const auto a = marked(m2, {1, 0});
  const auto self = decide_marked_iso(a, a);
  REQUIRE(self);
  CHECK(self->perm == projline::identity_permutation(2));
  CHECK(self->map == projline::Moebius::identity());
  const auto swapped = decide_marked_iso(a, marked(m2, {0, 1}));
  REQUIRE(swapped);
  CHECK(swapped->perm == Permutation{1, 0});

  const auto generic = model({0, 1, 3, 7, 8, 12});
  CHECK(oracle::realized_permutations(interval_image(generic), interval_image(generic)).size() == 1);
  CHECK_FALSE(decide_marked_iso(marked(generic, {1, 0, 0}), marked(generic, {0, 1, 0})));
  CHECK(decide_marked_iso(marked(generic, {1, 0, 0}), marked(generic, {1, 0, 0})));
}

TEST_CASE("decide_very_transitive table") {
  const auto v2 = decide_very_transitive(marked(model({0, 1, 2, 3}), {3, 0}));
  CHECK(v2.very_transitive);
  CHECK(v2.rule == "thm1.2(2a)");
  const auto v4 = decide_very_transitive(marked(model({0, 1, 2, 3, 4, 5, 6, 7}), {0, 0, 0, 0}));
  CHECK_FALSE(v4.very_transitive);
  CHECK_FALSE(v4.two_transitive);
  CHECK_FALSE(v4.componentwise);
  CHECK(v4.rule == "thm1.2-more-than-3");
  const auto v3 = decide_very_transitive(marked(model({0, 1, 3, 7, 8, 12}), {1, 2, 3}));
  CHECK(v3.very_transitive);
  CHECK(v3.componentwise);
  CHECK(v3.rule == "thm1.2(2b)");
}

TEST_CASE("very-transitivity verdicts are invariant under coordinate changes") {
  sampling::Rng rng(13);
  for (int i = 0; i < 30; ++i) {
    const auto r = static_cast<std::size_t>(sampling::uniform(rng, 1, 3));
    const auto m = sampling::random_model(rng, r);
    std::vector<std::size_t> counts;
    for (std::size_t k = 0; k < r; ++k) counts.push_back(static_cast<std::size_t>(sampling::uniform(rng, 0, 2)));
    const auto before = decide_very_transitive(marked(m, counts));
    // x -> 3x - 2 and a reversal x -> -x keep models in canonical form
    for (int sgn : {1, -1}) {
      std::vector<Rat> roots;
      for (const auto& a : m.roots()) roots.push_back(Rat(3 * sgn) * a - 2);
      std::sort(roots.begin(), roots.end());
      std::vector<std::size_t> moved = counts;
      if (sgn < 0) std::reverse(moved.begin(), moved.end());
      const auto after = decide_very_transitive(marked(ConicModel(roots), moved));
      CHECK(after.very_transitive == before.very_transitive);
      CHECK(after.rule == before.rule);
    }
  }
}

TEST_CASE("fiber points") {
  const auto m = model({0, 1});
  const auto p = fiber_point(m, R(1, 2));
  REQUIRE(p);
  CHECK(on_surface(m, *p));
  CHECK_FALSE(fiber_point(m, Rat(2)));
  const auto circle = fiber_circle_points(*p, 5);
  CHECK(circle.size() == 5);
  for (const auto& q : circle) CHECK(on_surface(m, q));
  CHECK(fiber_circle_points({Rat(0), 0, 0}, 5).size() == 1);
}
