#include "rcb/planner.hpp"

#include <algorithm>
#include <deque>

#include "rcb/error.hpp"

namespace rcb::planner {

using rcb::to_string;

Rect::Rect(Rat x0_, Rat x1_, Rat y0_, Rat y1_)
    : x0(std::move(x0_)), x1(std::move(x1_)), y0(std::move(y0_)), y1(std::move(y1_)) {
  if (x1 < x0 || y1 < y0) throw Error("InvalidRect", "rectangle ranges must satisfy min <= max");
}

bool Rect::contains(const Point2& p) const { return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1; }

bool Region::contains(const Point2& p) const {
  return std::any_of(rects.begin(), rects.end(), [&](const Rect& r) { return r.contains(p); });
}

namespace {

bool member(const std::vector<Rat>& values, const Rat& v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

void sort_unique(std::vector<Rat>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Cut coordinates refined by the midpoint of every gap.
std::vector<Rat> refine(std::vector<Rat> cuts) {
  sort_unique(cuts);
  std::vector<Rat> out;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (i) out.push_back(midpoint(cuts[i - 1], cuts[i]));
    out.push_back(cuts[i]);
  }
  return out;
}

}  // namespace

bool segment_inside(const Region& region, const Segment& s) {
  const bool vertical = s.vertical();
  if (!vertical && s.from.y != s.to.y) return false;
  Rat lo = vertical ? s.from.y : s.from.x;
  Rat hi = vertical ? s.to.y : s.to.x;
  if (hi < lo) std::swap(lo, hi);
  std::vector<Rat> cuts{lo, hi};
  for (const auto& r : region.rects) {
    for (const Rat* v : {vertical ? &r.y0 : &r.x0, vertical ? &r.y1 : &r.x1}) {
      if (lo < *v && *v < hi) cuts.push_back(*v);
    }
  }
  for (const auto& t : refine(cuts)) {
    const Point2 p = vertical ? Point2{s.from.x, t} : Point2{t, s.from.y};
    if (!region.contains(p)) return false;
  }
  return true;
}

bool validate_path(const Region& region, const SegPath& path, const Point2& start, const Point2& end,
                   const Forbidden& forbidden) {
  if (path.segments.empty()) return start == end;
  if (!(path.segments.front().from == start) || !(path.segments.back().to == end)) return false;
  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const Segment& s = path.segments[i];
    if (s.from == s.to) return false;
    if (i && !(path.segments[i - 1].to == s.from)) return false;
    if (s.vertical() && member(forbidden.x, s.from.x)) return false;
    if (!s.vertical() && member(forbidden.y, s.from.y)) return false;
    if (!segment_inside(region, s)) return false;
  }
  return true;
}

std::optional<SegPath> find_rect_path(const Region& region, const Point2& start, const Point2& end,
                                      const Forbidden& forbidden) {
  for (const Point2* p : {&start, &end}) {
    if (!region.contains(*p)) throw Error("OutsideRegion", "endpoint (" + to_string(p->x) + ", " + to_string(p->y) + ") is outside the region");
    if (member(forbidden.x, p->x) || member(forbidden.y, p->y)) {
      throw Error("OnForbiddenLine", "endpoint (" + to_string(p->x) + ", " + to_string(p->y) + ") lies on a forbidden line");
    }
  }
  if (start == end) return SegPath{};

  std::vector<Rat> xcuts{start.x, end.x}, ycuts{start.y, end.y};
  for (const auto& r : region.rects) {
    xcuts.push_back(r.x0);
    xcuts.push_back(r.x1);
    ycuts.push_back(r.y0);
    ycuts.push_back(r.y1);
  }
  xcuts.insert(xcuts.end(), forbidden.x.begin(), forbidden.x.end());
  ycuts.insert(ycuts.end(), forbidden.y.begin(), forbidden.y.end());
  const std::vector<Rat> xs = refine(xcuts);
  const std::vector<Rat> ys = refine(ycuts);
  const std::size_t nx = xs.size(), ny = ys.size();

  // Every node is a cut point or a cell midpoint; membership and
  // forbiddenness are constant between neighbouring nodes, so testing both
  // ends of a step decides it.
  std::vector<char> inside(nx * ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) inside[i * ny + j] = region.contains({xs[i], ys[j]});
  std::vector<char> xbad(nx), ybad(ny);
  for (std::size_t i = 0; i < nx; ++i) xbad[i] = member(forbidden.x, xs[i]);
  for (std::size_t j = 0; j < ny; ++j) ybad[j] = member(forbidden.y, ys[j]);

  const auto index_of = [](const std::vector<Rat>& v, const Rat& x) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  const std::size_t src = index_of(xs, start.x) * ny + index_of(ys, start.y);
  const std::size_t dst = index_of(xs, end.x) * ny + index_of(ys, end.y);

  // 0-1 breadth-first search over (node, heading): continuing along the
  // current heading is free, turning opens a new segment.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const std::size_t states = 2 * nx * ny;
  std::vector<std::size_t> dist(states, kNone), parent(states, kNone);
  std::deque<std::size_t> queue;
  auto relax = [&](std::size_t from, std::size_t to, std::size_t cost, bool front) {
    if (dist[to] != kNone && dist[to] <= cost) return;
    dist[to] = cost;
    parent[to] = from;
    if (front) queue.push_front(to);
    else queue.push_back(to);
  };
  // Heading 0 = horizontal, 1 = vertical; state = node * 2 + heading.
  for (std::size_t h = 0; h < 2; ++h) {
    dist[src * 2 + h] = 0;
    parent[src * 2 + h] = src * 2 + h;
    queue.push_back(src * 2 + h);
  }
  while (!queue.empty()) {
    const std::size_t state = queue.front();
    queue.pop_front();
    const std::size_t node = state / 2, heading = state % 2;
    const std::size_t i = node / ny, j = node % ny;
    auto step = [&](std::size_t ni, std::size_t nj, std::size_t dir) {
      const std::size_t next = ni * ny + nj;
      if (!inside[next]) return;
      const bool turn = dir != heading || node == src;
      relax(state, next * 2 + dir, dist[state] + (turn ? 1 : 0), !turn);
    };
    if (!ybad[j]) {
      if (i > 0) step(i - 1, j, 0);
      if (i + 1 < nx) step(i + 1, j, 0);
    }
    if (!xbad[i]) {
      if (j > 0) step(i, j - 1, 1);
      if (j + 1 < ny) step(i, j + 1, 1);
    }
  }
  std::size_t best = kNone;
  for (std::size_t h = 0; h < 2; ++h) {
    const std::size_t s = dst * 2 + h;
    if (dist[s] != kNone && (best == kNone || dist[s] < dist[best])) best = s;
  }
  if (best == kNone) return std::nullopt;

  std::vector<Point2> nodes;
  for (std::size_t cur = best;; cur = parent[cur]) {
    const std::size_t node = cur / 2;
    nodes.push_back({xs[node / ny], ys[node % ny]});
    if (parent[cur] == cur) break;
  }
  std::reverse(nodes.begin(), nodes.end());

  SegPath path;
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    Segment step{nodes[k - 1], nodes[k]};
    if (!path.segments.empty() && path.segments.back().vertical() == step.vertical()) {
      path.segments.back().to = step.to;
    } else {
      path.segments.push_back(std::move(step));
    }
  }
  if (!validate_path(region, path, start, end, forbidden)) {
    throw Error("InternalError", "planner produced an invalid path");
  }
  return path;
}

}  // namespace rcb::planner
