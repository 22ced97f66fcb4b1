#include "crosstopo/setdesc.hpp"

#include <algorithm>

namespace crosstopo {

namespace {

void validate_interval(const Interval& iv, const std::string& path) {
  if (!in_unit_interval(iv.lo) || !in_unit_interval(iv.hi)) {
    throw ValidationError("interval [" + format_rat(iv.lo) + ", " +
                              format_rat(iv.hi) + "] leaves [0,1]",
                          path);
  }
  if (iv.lo > iv.hi) {
    throw ValidationError("empty interval: lo " + format_rat(iv.lo) +
                              " > hi " + format_rat(iv.hi),
                          path);
  }
  if (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed)) {
    throw ValidationError(
        "degenerate interval at " + format_rat(iv.lo) +
            " with an open endpoint denotes the empty set",
        path);
  }
}

}  // namespace

void validate(const SetDesc& s) {
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    const std::string path = "parts[" + std::to_string(i) + "]";
    std::visit(
        [&](const auto& prim) {
          using T = std::decay_t<decltype(prim)>;
          if constexpr (std::is_same_v<T, Box>) {
            validate_interval(prim.x, path + ".x");
            validate_interval(prim.y, path + ".y");
          } else if constexpr (std::is_same_v<T, Segment>) {
            if (!in_unit_interval(prim.level)) {
              throw ValidationError(
                  "level " + format_rat(prim.level) + " outside [0,1]",
                  path + ".level");
            }
            validate_interval(prim.span, path + ".span");
          } else if constexpr (std::is_same_v<T, SinglePoint>) {
            validate_point(prim.p, path + ".p");
          } else {
            validate_seq(prim.seq, path + ".seq");
          }
        },
        s.parts[i]);
  }
  for (std::size_t i = 0; i < s.deletions.size(); ++i) {
    validate_point(s.deletions[i], "deletions[" + std::to_string(i) + "]");
  }
}

bool primitive_contains(const Primitive& prim, const Point& p) {
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Box>) {
          return v.x.contains(p.x) && v.y.contains(p.y);
        } else if constexpr (std::is_same_v<T, Segment>) {
          if (v.axis == Axis::vertical) {
            return p.x == v.level && v.span.contains(p.y);
          }
          return p.y == v.level && v.span.contains(p.x);
        } else if constexpr (std::is_same_v<T, SinglePoint>) {
          return v.p == p;
        } else {
          return trace_index_of(v.seq, p).has_value();
        }
      },
      prim);
}

bool is_deleted(const SetDesc& s, const Point& p) {
  return std::find(s.deletions.begin(), s.deletions.end(), p) !=
         s.deletions.end();
}

bool contains(const SetDesc& s, const Point& p) {
  if (is_deleted(s, p)) return false;
  for (const Primitive& prim : s.parts) {
    if (primitive_contains(prim, p)) return true;
  }
  return false;
}

bool box_member(const SetDesc& s, const Point& p) {
  for (const Primitive& prim : s.parts) {
    if (const Box* b = std::get_if<Box>(&prim)) {
      if (b->x.contains(p.x) && b->y.contains(p.y)) return true;
    }
  }
  return false;
}

bool line_member(const SetDesc& s, const Point& p) {
  for (const Primitive& prim : s.parts) {
    if (std::holds_alternative<SinglePoint>(prim) ||
        std::holds_alternative<SeqTrace>(prim)) {
      continue;
    }
    if (primitive_contains(prim, p)) return true;
  }
  return false;
}

SetDesc square_desc() {
  return SetDesc{{Box{unit_closed(), unit_closed()}}, {}};
}

SetDesc open_square_desc() {
  return SetDesc{
      {Box{open_interval(Rat(0), Rat(1)), open_interval(Rat(0), Rat(1))}}, {}};
}

SetDesc vertical_segment(const Rat& x, Interval span) {
  return SetDesc{{Segment{Axis::vertical, x, span}}, {}};
}

SetDesc horizontal_segment(const Rat& y, Interval span) {
  return SetDesc{{Segment{Axis::horizontal, y, span}}, {}};
}

SetDesc cross_desc(const Point& p) {
  return SetDesc{{Segment{Axis::vertical, p.x, unit_closed()},
                  Segment{Axis::horizontal, p.y, unit_closed()}},
                 {}};
}

SetDesc trace_desc(SeqSpec seq) { return SetDesc{{SeqTrace{std::move(seq)}}, {}}; }

SetDesc points_desc(const std::vector<Point>& pts) {
  SetDesc out;
  for (const Point& p : pts) out.parts.push_back(SinglePoint{p});
  return out;
}

std::string describe_primitive(const Primitive& prim) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Box>) {
          auto end = [](bool closed, bool left) {
            return closed ? (left ? "[" : "]") : (left ? "(" : ")");
          };
          return std::string("box ") + end(v.x.lo_closed, true) +
                 format_rat(v.x.lo) + ", " + format_rat(v.x.hi) +
                 end(v.x.hi_closed, false) + " x " + end(v.y.lo_closed, true) +
                 format_rat(v.y.lo) + ", " + format_rat(v.y.hi) +
                 end(v.y.hi_closed, false);
        } else if constexpr (std::is_same_v<T, Segment>) {
          return std::string(v.axis == Axis::vertical ? "vertical" :
                                                        "horizontal") +
                 " segment at " + format_rat(v.level);
        } else if constexpr (std::is_same_v<T, SinglePoint>) {
          return "point " + format_point(v.p);
        } else {
          return "trace with prefix length " +
                 std::to_string(v.seq.prefix.size());
        }
      },
      prim);
}

}  // namespace crosstopo
