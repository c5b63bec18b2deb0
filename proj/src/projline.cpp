#include "rcb/projline.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "rcb/error.hpp"

namespace rcb::projline {

using rcb::to_string;

namespace {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace

// ---------------------------------------------------------------------------
// ProjPoint
// ---------------------------------------------------------------------------

ProjPoint::ProjPoint(Int u0, Int u1) : u0_(std::move(u0)), u1_(std::move(u1)) {
  if (u0_ == 0 && u1_ == 0) throw Error("ZeroPoint", "(0 : 0) is not a projective point");
  Int g = gcd(u0_, u1_);
  u0_ /= g;
  u1_ /= g;
  if (u0_ < 0 || (u0_ == 0 && u1_ < 0)) {
    u0_ = -u0_;
    u1_ = -u1_;
  }
}

ProjPoint ProjPoint::finite(const Rat& x) { return ProjPoint(x.get_num(), x.get_den()); }

Rat ProjPoint::value() const {
  if (is_infinite()) throw Error("InfinitePoint", "infinity has no affine value");
  return make_rat(u0_, u1_);
}

std::strong_ordering cyclic_compare(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  const int c = cmp(a.value(), b.value());
  return c <=> 0;
}

std::string to_string(const ProjPoint& p) {
  return p.is_infinite() ? std::string("inf") : to_string(p.value());
}

// ---------------------------------------------------------------------------
// Moebius
// ---------------------------------------------------------------------------

Moebius::Moebius(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  Int den = lcm(lcm(a.get_den(), b.get_den()), lcm(c.get_den(), d.get_den()));
  std::array<Int, 4> v{a.get_num() * (den / a.get_den()), b.get_num() * (den / b.get_den()),
                       c.get_num() * (den / c.get_den()), d.get_num() * (den / d.get_den())};
  if (v[0] * v[3] - v[1] * v[2] == 0) throw Error("SingularMoebius", "determinant is zero");
  Int g = gcd(gcd(v[0], v[1]), gcd(v[2], v[3]));
  const auto first = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : v) x /= g;
  a_ = v[0];
  b_ = v[1];
  c_ = v[2];
  d_ = v[3];
}

int Moebius::orientation() const { return sgn(det()) > 0 ? 1 : -1; }

Moebius Moebius::inverse() const { return Moebius(Rat(d_), Rat(-b_), Rat(-c_), Rat(a_)); }

Moebius Moebius::compose(const Moebius& o) const {
  return Moebius(Rat(a_ * o.a_ + b_ * o.c_), Rat(a_ * o.b_ + b_ * o.d_), Rat(c_ * o.a_ + d_ * o.c_),
                 Rat(c_ * o.b_ + d_ * o.d_));
}

std::string to_string(const Moebius& m) {
  return "(" + m.a().get_str() + "," + m.b().get_str() + "," + m.c().get_str() + "," +
         m.d().get_str() + ")";
}

ProjPoint moebius_apply(const Moebius& m, const ProjPoint& p) {
  return ProjPoint(m.a() * p.u0() + m.b() * p.u1(), m.c() * p.u0() + m.d() * p.u1());
}

namespace {

// Linear form vanishing at p, evaluated at z.
Int vanishing(const ProjPoint& z, const ProjPoint& p) { return z.u0() * p.u1() - z.u1() * p.u0(); }

// Sends (p1, p2, p3) to (0, 1, inf).
Moebius to_standard(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3) {
    throw Error("InvalidTriple", "points " + to_string(p1) + ", " + to_string(p2) + ", " +
                                     to_string(p3) + " are not pairwise distinct");
  }
  const Int top = vanishing(p2, p3);
  const Int bottom = vanishing(p2, p1);
  return Moebius(Rat(top * p1.u1()), Rat(-top * p1.u0()), Rat(bottom * p3.u1()),
                 Rat(-bottom * p3.u0()));
}

}  // namespace

Moebius moebius_from_triples(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                             const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3) {
  const Moebius from = to_standard(p1, p2, p3);
  const Moebius to = to_standard(q1, q2, q3);
  return to.inverse().compose(from);
}

ProjPoint cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                      const ProjPoint& p4) {
  return moebius_apply(to_standard(p1, p2, p3), p4);
}

// ---------------------------------------------------------------------------
// Intervals
// ---------------------------------------------------------------------------

Interval::Interval(ProjPoint start, ProjPoint end) : start_(std::move(start)), end_(std::move(end)) {
  if (start_ == end_) throw Error("DegenerateInterval", "interval endpoints coincide at " + to_string(start_));
}

bool Interval::contains(const ProjPoint& p) const {
  const auto after_start = cyclic_compare(p, start_) >= 0;
  const auto before_end = cyclic_compare(p, end_) <= 0;
  if (cyclic_compare(start_, end_) < 0) return after_start && before_end;
  return after_start || before_end;
}

ProjPoint Interval::interior_sample() const {
  if (start_.is_infinite()) return ProjPoint::finite(end_.value() - 1);
  if (end_.is_infinite()) return ProjPoint::finite(start_.value() + 1);
  const Rat s = start_.value();
  const Rat e = end_.value();
  if (s < e) return ProjPoint::finite(midpoint(s, e));
  return ProjPoint::infinity();
}

Interval interval_image(const Moebius& m, const Interval& arc) {
  ProjPoint s = moebius_apply(m, arc.start());
  ProjPoint e = moebius_apply(m, arc.end());
  if (m.orientation() > 0) return Interval(std::move(s), std::move(e));
  return Interval(std::move(e), std::move(s));
}

namespace {

bool start_before(const Interval& a, const Interval& b) {
  if (a.start().is_infinite() != b.start().is_infinite()) return a.start().is_infinite();
  return cyclic_compare(a.start(), b.start()) < 0;
}

}  // namespace

IntervalConfig::IntervalConfig(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  std::set<ProjPoint, ProjPointLess> seen;
  for (const auto& arc : intervals_) {
    if (!seen.insert(arc.start()).second || !seen.insert(arc.end()).second) {
      throw Error("InvalidConfig", "boundary points are not distinct");
    }
  }
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    for (std::size_t j = 0; j < intervals_.size(); ++j) {
      if (i == j) continue;
      if (intervals_[i].contains(intervals_[j].start()) || intervals_[i].contains(intervals_[j].end())) {
        throw Error("InvalidConfig", "intervals overlap");
      }
    }
  }
  std::sort(intervals_.begin(), intervals_.end(), start_before);
}

std::vector<ProjPoint> IntervalConfig::boundary() const {
  std::vector<ProjPoint> out;
  out.reserve(2 * intervals_.size());
  for (const auto& arc : intervals_) {
    out.push_back(arc.start());
    out.push_back(arc.end());
  }
  return out;
}

std::optional<std::size_t> IntervalConfig::locate(const ProjPoint& p) const {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (intervals_[i].contains(p)) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Equivalence decisions
// ---------------------------------------------------------------------------

bool verify_match(const IntervalConfig& from, const IntervalConfig& to, const Moebius& m,
                  const Permutation& perm) {
  if (from.size() != to.size() || perm.size() != from.size()) return false;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (perm[i] >= to.size()) return false;
    const Interval& target = to[perm[i]];
    if (!(interval_image(m, from[i]) == target)) return false;
    if (!target.contains(moebius_apply(m, from[i].interior_sample()))) return false;
  }
  return true;
}

namespace {

std::size_t wrap(long i, std::size_t r) {
  const long n = static_cast<long>(r);
  return static_cast<std::size_t>(((i % n) + n) % n);
}

}  // namespace

std::vector<ConfigMatch> config_matches(const IntervalConfig& from, const IntervalConfig& to) {
  std::vector<ConfigMatch> out;
  const std::size_t r = from.size();
  if (r != to.size()) return out;
  if (r == 0) {
    out.push_back({Moebius::identity(), {}});
    return out;
  }
  for (int orientation : {1, -1}) {
    for (std::size_t k = 0; k < r; ++k) {
      Permutation perm(r);
      for (std::size_t i = 0; i < r; ++i) {
        perm[i] = orientation > 0 ? wrap(static_cast<long>(i + k), r)
                                  : wrap(static_cast<long>(k) - static_cast<long>(i), r);
      }
      // Images of s_0 and e_0, then of a third point: s_1, or the interior
      // sample when there is a single interval.
      const Interval& t0 = to[perm[0]];
      const ProjPoint& img_s0 = orientation > 0 ? t0.start() : t0.end();
      const ProjPoint& img_e0 = orientation > 0 ? t0.end() : t0.start();
      Moebius m = Moebius::identity();
      if (r == 1) {
        m = moebius_from_triples(from[0].start(), from[0].end(), from[0].interior_sample(), img_s0,
                                 img_e0, t0.interior_sample());
      } else {
        const Interval& t1 = to[perm[1]];
        const ProjPoint& img_s1 = orientation > 0 ? t1.start() : t1.end();
        m = moebius_from_triples(from[0].start(), from[0].end(), from[1].start(), img_s0, img_e0,
                                 img_s1);
      }
      if (verify_match(from, to, m, perm)) out.push_back({m, perm});
    }
  }
  return out;
}

std::optional<ConfigMatch> config_equiv(const IntervalConfig& from, const IntervalConfig& to,
                                        const std::optional<Permutation>& perm) {
  for (auto& match : config_matches(from, to)) {
    if (!perm || match.perm == *perm) return match;
  }
  return std::nullopt;
}

std::vector<ConfigMatch> realizable_permutations(const IntervalConfig& config) {
  std::vector<ConfigMatch> out;
  for (auto& match : config_matches(config, config)) {
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const ConfigMatch& m) { return m.perm == match.perm; });
    if (!seen) out.push_back(std::move(match));
  }
  return out;
}

std::vector<Moebius> stabilizer(const std::vector<ProjPoint>& points) {
  std::vector<ProjPoint> set(points);
  std::sort(set.begin(), set.end(), ProjPointLess{});
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.size() < 3) {
    throw Error("InfiniteStabilizer", "a set of fewer than three points has an infinite stabilizer");
  }
  std::vector<Moebius> out;
  const std::size_t n = set.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const Moebius m = moebius_from_triples(set[0], set[1], set[2], set[i], set[j], set[k]);
        std::vector<ProjPoint> image;
        image.reserve(n);
        for (const auto& p : set) image.push_back(moebius_apply(m, p));
        std::sort(image.begin(), image.end(), ProjPointLess{});
        if (image == set && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
      }
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

}  // namespace rcb::projline
