#include "crosstopo/crossmap.hpp"

#include <algorithm>

namespace crosstopo {

Point GridFn::domain_center(int col, int row) const {
  const Rat w = (domain.x_hi - domain.x_lo) / n;
  const Rat h = (domain.y_hi - domain.y_lo) / n;
  return Point{domain.x_lo + w * (2 * col + 1) / 2,
               domain.y_lo + h * (2 * row + 1) / 2};
}

void validate(const GridFn& f) {
  if (f.n < 1) {
    throw ValidationError("grid resolution must be >= 1, got " +
                          std::to_string(f.n));
  }
  if (f.domain.x_lo >= f.domain.x_hi || f.domain.y_lo >= f.domain.y_hi) {
    throw ValidationError("domain rectangle is empty");
  }
  const std::size_t expected = static_cast<std::size_t>(f.n) * f.n;
  if (f.image.size() != expected) {
    throw ValidationError("image list has " + std::to_string(f.image.size()) +
                          " entries, expected " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < f.image.size(); ++i) {
    validate_point(f.image[i], "image[" + std::to_string(i) + "]");
  }
}

std::optional<std::pair<int, int>> raster_continuity_violation(
    const GridFn& f) {
  const Rat bound = Rat(1) / f.n;
  auto within = [&](const Point& a, const Point& b) {
    return rat_abs(a.x - b.x) <= bound && rat_abs(a.y - b.y) <= bound;
  };
  for (int row = 0; row < f.n; ++row) {
    for (int col = 0; col < f.n; ++col) {
      const int idx = col + row * f.n;
      if (col + 1 < f.n && !within(f.at(col, row), f.at(col + 1, row))) {
        return std::make_pair(idx, idx + 1);
      }
      if (row + 1 < f.n && !within(f.at(col, row), f.at(col, row + 1))) {
        return std::make_pair(idx, idx + f.n);
      }
    }
  }
  return std::nullopt;
}

CrossPropertyResult check_cross_property(const GridFn& f) {
  for (int row = 0; row < f.n; ++row) {
    for (int col = 0; col < f.n; ++col) {
      if (!on_cross(f.at(col, row), f.domain_center(col, row))) {
        return CrossPropertyResult{false, CellRef{col, row}};
      }
    }
  }
  return CrossPropertyResult{};
}

ClassifyResult classify_cross_mapping(const GridFn& f, std::vector<Rat> A,
                                      std::vector<Rat> B) {
  validate(f);
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());

  ClassifyResult out;
  if (const auto bad = raster_continuity_violation(f)) {
    out.kind = ClassifyResult::Kind::violation;
    out.violation_kind = "continuity";
    out.witness_cells = {CellRef{bad->first % f.n, bad->first / f.n},
                         CellRef{bad->second % f.n, bad->second / f.n}};
    return out;
  }
  if (const auto cp = check_cross_property(f); !cp.ok) {
    out.kind = ClassifyResult::Kind::violation;
    out.violation_kind = "cross-property";
    out.witness_cells = {cp.violation};
    return out;
  }
  for (int row = 0; row < f.n; ++row) {
    for (int col = 0; col < f.n; ++col) {
      const Point& q = f.at(col, row);
      if (!sorted_contains(A, q.x) && !sorted_contains(B, q.y)) {
        out.kind = ClassifyResult::Kind::violation;
        out.violation_kind = "image";
        out.witness_cells = {CellRef{col, row}};
        return out;
      }
    }
  }

  const Point& first = f.at(0, 0);
  bool same_x = true, same_y = true;
  CellRef x_differs, y_differs;
  for (int row = 0; row < f.n; ++row) {
    for (int col = 0; col < f.n; ++col) {
      const Point& q = f.at(col, row);
      if (q.x != first.x && same_x) {
        same_x = false;
        x_differs = CellRef{col, row};
      }
      if (q.y != first.y && same_y) {
        same_y = false;
        y_differs = CellRef{col, row};
      }
    }
  }
  const bool column_ok = same_x && sorted_contains(A, first.x);
  const bool row_ok = same_y && sorted_contains(B, first.y);
  if (column_ok) {
    out.kind = ClassifyResult::Kind::column_collapse;
    out.level = first.x;
    out.both_collapse = row_ok;  // constant map into A x B
    return out;
  }
  if (row_ok) {
    out.kind = ClassifyResult::Kind::row_collapse;
    out.level = first.y;
    return out;
  }
  out.kind = ClassifyResult::Kind::violation;
  out.violation_kind = "dichotomy";
  out.witness_cells = {CellRef{0, 0}, x_differs, y_differs};
  return out;
}

namespace {

struct Enumerator {
  int n;
  std::vector<Rat> a_levels, b_levels;
  std::vector<Point> allowed;  // codomain points passing image containment
  Rat bound;
  const std::function<void(const GridFn&)>* visit;
  std::uint64_t cap;
  std::uint64_t yielded = 0;
  GridFn current;

  // candidates per cell: allowed points sharing a coordinate with the center
  std::vector<std::vector<const Point*>> cell_candidates;

  void build_candidates() {
    cell_candidates.resize(static_cast<std::size_t>(n) * n);
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col < n; ++col) {
        const Point center = current.domain_center(col, row);
        auto& list = cell_candidates[static_cast<std::size_t>(col + row * n)];
        for (const Point& q : allowed) {
          if (on_cross(q, center)) list.push_back(&q);
        }
      }
    }
  }

  bool compatible(const Point& q, int col, int row) const {
    // continuity against the already-assigned left and lower neighbors
    if (col > 0) {
      const Point& left = current.at(col - 1, row);
      if (rat_abs(q.x - left.x) > bound || rat_abs(q.y - left.y) > bound) {
        return false;
      }
    }
    if (row > 0) {
      const Point& below = current.at(col, row - 1);
      if (rat_abs(q.x - below.x) > bound || rat_abs(q.y - below.y) > bound) {
        return false;
      }
    }
    return true;
  }

  void recurse(int idx) {
    const int total = n * n;
    if (idx == total) {
      if (++yielded > cap) throw EnumerationOverflow(cap);
      (*visit)(current);
      return;
    }
    const int col = idx % n, row = idx / n;
    for (const Point* q : cell_candidates[static_cast<std::size_t>(idx)]) {
      if (!compatible(*q, col, row)) continue;
      current.image[static_cast<std::size_t>(idx)] = *q;
      recurse(idx + 1);
    }
  }
};

}  // namespace

std::uint64_t enumerate_cross_mappings(
    int n, std::vector<Rat> A, std::vector<Rat> B,
    const std::function<void(const GridFn&)>& visit,
    const EnumerationLimits& limits) {
  if (n < 1 || n > 4) {
    throw ValidationError("enumeration resolution must be in [1,4], got " +
                          std::to_string(n));
  }
  if (A.size() > 2 || B.size() > 2) {
    throw ValidationError("enumeration level sets must have at most 2 values");
  }
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());

  Enumerator en;
  en.n = n;
  en.a_levels = A;
  en.b_levels = B;
  en.bound = Rat(1) / n;
  en.visit = &visit;
  en.cap = limits.max_yield;
  en.current.n = n;
  en.current.image.assign(static_cast<std::size_t>(n) * n, Point{});

  // allowed codomain values: centers plus the levels, per axis
  std::vector<Rat> axis_x, axis_y;
  for (int i = 0; i < n; ++i) {
    insert_sorted_unique(axis_x, Rat(2 * i + 1) / Rat(2 * n));
    insert_sorted_unique(axis_y, Rat(2 * i + 1) / Rat(2 * n));
  }
  for (const Rat& a : A) insert_sorted_unique(axis_x, a);
  for (const Rat& b : B) insert_sorted_unique(axis_y, b);
  for (const Rat& x : axis_x) {
    for (const Rat& y : axis_y) {
      // image containment in cross(A x B): x on a column level or y on a row
      if (sorted_contains(A, x) || sorted_contains(B, y)) {
        en.allowed.push_back(Point{x, y});
      }
    }
  }

  en.build_candidates();
  en.recurse(0);
  return en.yielded;
}

std::uint64_t count_cross_mappings(int n, std::vector<Rat> A,
                                   std::vector<Rat> B,
                                   const EnumerationLimits& limits) {
  return enumerate_cross_mappings(
      n, std::move(A), std::move(B), [](const GridFn&) {}, limits);
}

}  // namespace crosstopo
