// Points of the rational unit square and finite crosses (unions of full
// horizontal/vertical lines through finitely many points).

#pragma once

#include "crosstopo/rat.hpp"

#include <compare>
#include <string>
#include <vector>

namespace crosstopo {

struct Point {
  Rat x;
  Rat y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const {
    return x < o.x || (x == o.x && y < o.y);
  }
};

inline Point point(long long xn, long long xd, long long yn, long long yd) {
  return Point{rat(xn, xd), rat(yn, yd)};
}

std::string format_point(const Point& p);

/// Throws ValidationError if p is outside [0,1]^2.
void validate_point(const Point& p, const std::string& path);

/// Finite union of full lines: all points with x in `cols` or y in `rows`.
struct CrossSet {
  std::vector<Rat> cols;  // sorted, unique x-levels
  std::vector<Rat> rows;  // sorted, unique y-levels

  bool contains(const Point& p) const;
  bool empty() const { return cols.empty() && rows.empty(); }
  CrossSet united(const CrossSet& other) const;

  bool operator==(const CrossSet& o) const {
    return cols == o.cols && rows == o.rows;
  }
};

CrossSet cross_of_point(const Point& p);
CrossSet cross_of_finite(const std::vector<Point>& points);

/// True iff p shares a coordinate with `center` (lies on its full cross).
inline bool on_cross(const Point& p, const Point& center) {
  return p.x == center.x || p.y == center.y;
}

/// Inserts v into a sorted unique vector (no-op if present).
void insert_sorted_unique(std::vector<Rat>& values, const Rat& v);

bool sorted_contains(const std::vector<Rat>& values, const Rat& v);

}  // namespace crosstopo
