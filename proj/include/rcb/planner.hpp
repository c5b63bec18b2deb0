#pragma once

#include <optional>
#include <vector>

#include "rcb/rational.hpp"

namespace rcb::planner {

struct Point2 {
  Rat x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Closed box [x0, x1] x [y0, y1]; degenerate boxes are allowed.
struct Rect {
  Rat x0, x1, y0, y1;
  Rect(Rat x0, Rat x1, Rat y0, Rat y1);
  bool contains(const Point2& p) const;
};

/// Union of closed boxes; overlaps allowed.
struct Region {
  std::vector<Rect> rects;
  bool contains(const Point2& p) const;
};

/// Axis-parallel segment.
struct Segment {
  Point2 from, to;
  bool vertical() const { return from.x == to.x; }
};

struct SegPath {
  std::vector<Segment> segments;
};

struct Forbidden {
  std::vector<Rat> x;
  std::vector<Rat> y;
};

/// Path of horizontal and vertical segments inside `region` from `start` to
/// `end`, where no vertical segment runs along a forbidden x and no
/// horizontal segment along a forbidden y. Throws OutsideRegion or
/// OnForbiddenLine for bad endpoints; nullopt when no such path exists.
std::optional<SegPath> find_rect_path(const Region& region, const Point2& start, const Point2& end,
                                      const Forbidden& forbidden);

/// True when the segment lies inside the region.
bool segment_inside(const Region& region, const Segment& s);

/// Checks a path segment by segment: axis-parallel, chained, inside the
/// region, avoiding forbidden lines, joining start to end.
bool validate_path(const Region& region, const SegPath& path, const Point2& start, const Point2& end,
                   const Forbidden& forbidden);

}  // namespace rcb::planner
