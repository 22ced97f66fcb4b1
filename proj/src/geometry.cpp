#include "crosstopo/geometry.hpp"

#include <algorithm>

namespace crosstopo {

std::string format_point(const Point& p) {
  return "(" + format_rat(p.x) + ", " + format_rat(p.y) + ")";
}

void validate_point(const Point& p, const std::string& path) {
  if (!in_unit_interval(p.x)) {
    throw ValidationError("x coordinate " + format_rat(p.x) +
                              " outside [0,1]",
                          path);
  }
  if (!in_unit_interval(p.y)) {
    throw ValidationError("y coordinate " + format_rat(p.y) +
                              " outside [0,1]",
                          path);
  }
}

void insert_sorted_unique(std::vector<Rat>& values, const Rat& v) {
  auto it = std::lower_bound(values.begin(), values.end(), v);
  if (it == values.end() || *it != v) values.insert(it, v);
}

bool sorted_contains(const std::vector<Rat>& values, const Rat& v) {
  return std::binary_search(values.begin(), values.end(), v);
}

bool CrossSet::contains(const Point& p) const {
  return sorted_contains(cols, p.x) || sorted_contains(rows, p.y);
}

CrossSet CrossSet::united(const CrossSet& other) const {
  CrossSet out = *this;
  for (const Rat& c : other.cols) insert_sorted_unique(out.cols, c);
  for (const Rat& r : other.rows) insert_sorted_unique(out.rows, r);
  return out;
}

CrossSet cross_of_point(const Point& p) {
  return CrossSet{{p.x}, {p.y}};
}

CrossSet cross_of_finite(const std::vector<Point>& points) {
  CrossSet out;
  for (const Point& p : points) {
    insert_sorted_unique(out.cols, p.x);
    insert_sorted_unique(out.rows, p.y);
  }
  return out;
}

}  // namespace crosstopo
