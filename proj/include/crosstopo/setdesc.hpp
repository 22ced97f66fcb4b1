// Symbolic subsets of the unit square: finite unions of boxes, axis-parallel
// segments, single points and sequence traces, minus a finite deletion set.
// Membership is exact; all higher predicates (openness, closedness,
// compactness) are decided on these descriptions symbolically.

#pragma once

#include "crosstopo/seqspec.hpp"

#include <string>
#include <variant>
#include <vector>

namespace crosstopo {

struct Interval {
  Rat lo;
  Rat hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Rat& v) const {
    if (v < lo || v > hi) return false;
    if (v == lo && !lo_closed) return false;
    if (v == hi && !hi_closed) return false;
    return true;
  }

  bool degenerate() const { return lo == hi; }

  bool operator==(const Interval& o) const {
    return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed &&
           hi_closed == o.hi_closed;
  }
};

inline Interval closed_interval(const Rat& lo, const Rat& hi) {
  return Interval{lo, hi, true, true};
}
inline Interval open_interval(const Rat& lo, const Rat& hi) {
  return Interval{lo, hi, false, false};
}
inline Interval unit_closed() { return closed_interval(Rat(0), Rat(1)); }

struct Box {
  Interval x;
  Interval y;
  bool operator==(const Box& o) const = default;
};

enum class Axis { vertical, horizontal };

/// Vertical: the set {level} x span. Horizontal: span x {level}.
struct Segment {
  Axis axis;
  Rat level;
  Interval span;
  bool operator==(const Segment& o) const = default;
};

struct SinglePoint {
  Point p;
  bool operator==(const SinglePoint& o) const = default;
};

struct SeqTrace {
  SeqSpec seq;
  bool operator==(const SeqTrace& o) const = default;
};

using Primitive = std::variant<Box, Segment, SinglePoint, SeqTrace>;

struct SetDesc {
  std::vector<Primitive> parts;
  std::vector<Point> deletions;
  bool operator==(const SetDesc& o) const = default;
};

/// Throws ValidationError naming the offending primitive on empty
/// intervals, out-of-square coordinates or malformed tails.
void validate(const SetDesc& s);

bool primitive_contains(const Primitive& prim, const Point& p);

/// Exact membership of p in the denoted subset.
bool contains(const SetDesc& s, const Point& p);

/// Membership in the union of box primitives only. Constant on the open
/// 2-cells of the critical arrangement; used for generic face queries.
bool box_member(const SetDesc& s, const Point& p);

/// Membership in boxes and segments (everything of dimension >= 1).
/// Constant on arrangement cells and open edges.
bool line_member(const SetDesc& s, const Point& p);

bool is_deleted(const SetDesc& s, const Point& p);

// -- convenience builders (used heavily by tests and suites) --

SetDesc square_desc();
SetDesc open_square_desc();
SetDesc vertical_segment(const Rat& x, Interval span);
SetDesc horizontal_segment(const Rat& y, Interval span);
/// Full cross through p: vertical and horizontal unit segments.
SetDesc cross_desc(const Point& p);
SetDesc trace_desc(SeqSpec seq);
SetDesc points_desc(const std::vector<Point>& pts);

std::string describe_primitive(const Primitive& prim);

}  // namespace crosstopo
