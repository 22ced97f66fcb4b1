// Executable cross-mapping classifier and brute-force enumerator.
//
// A GridFn samples a map on cell centers of an N x N grid over a domain
// rectangle. Raster-continuity (adjacent images within 1/N per coordinate)
// is the discrete stand-in for continuity; it is a proxy, not a theorem
// transfer. The classifier decides row/column collapse of maps whose image
// lies in a finite cross, and reports which hypothesis broke otherwise.

#pragma once

#include "crosstopo/geometry.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace crosstopo {

struct Rect {
  Rat x_lo{0}, x_hi{1};
  Rat y_lo{0}, y_hi{1};
};

struct GridFn {
  Rect domain;
  int n = 0;                  // cells per axis
  std::vector<Point> image;   // row-major, index = col + row * n

  Point domain_center(int col, int row) const;
  const Point& at(int col, int row) const {
    return image[static_cast<std::size_t>(col + row * n)];
  }
};

/// Structural validation: n >= 1, nonempty domain, full image list.
void validate(const GridFn& f);

/// Adjacent images must differ by at most 1/n in each coordinate.
/// Returns the first offending pair of cells (row-major order) if any.
std::optional<std::pair<int, int>> raster_continuity_violation(const GridFn& f);

struct CellRef {
  int col = 0, row = 0;
};

struct CrossPropertyResult {
  bool ok = true;
  CellRef violation;  // first cell whose image leaves cross(center)
};

/// Every cell's image must share its x or its y with the cell center.
CrossPropertyResult check_cross_property(const GridFn& f);

struct ClassifyResult {
  enum class Kind { row_collapse, column_collapse, violation } kind;
  Rat level;                 // collapse level (a or b)
  bool both_collapse = false;  // constant map landing on a column and a row
  std::string violation_kind;  // "continuity" | "cross-property" | "image" | "dichotomy"
  std::vector<CellRef> witness_cells;
};

/// Decides the collapse dichotomy for f against finite level sets A
/// (columns) and B (rows). Hypothesis failures (continuity, cross
/// property, image containment) are distinguished from a dichotomy
/// failure, which on raster inputs means the discrete continuity proxy
/// was too weak to force the collapse.
ClassifyResult classify_cross_mapping(const GridFn& f, std::vector<Rat> A,
                                      std::vector<Rat> B);

struct EnumerationLimits {
  std::uint64_t max_yield = 5'000'000;  // overflow error beyond this
};

class EnumerationOverflow : public std::runtime_error {
 public:
  explicit EnumerationOverflow(std::uint64_t cap)
      : std::runtime_error("enumeration exceeded the configured budget of " +
                           std::to_string(cap) + " mappings") {}
};

/// Exhaustively yields every GridFn on the unit-square grid at resolution n
/// (n <= 4, |A|,|B| <= 2) with image coordinates drawn from cell centers
/// and the given levels, satisfying raster-continuity, the cross property
/// and image containment in cross(A x B). Deterministic order. Throws
/// EnumerationOverflow when the budget is hit, never truncates silently.
std::uint64_t enumerate_cross_mappings(
    int n, std::vector<Rat> A, std::vector<Rat> B,
    const std::function<void(const GridFn&)>& visit,
    const EnumerationLimits& limits = {});

/// Count-only convenience wrapper.
std::uint64_t count_cross_mappings(int n, std::vector<Rat> A,
                                   std::vector<Rat> B,
                                   const EnumerationLimits& limits = {});

}  // namespace crosstopo
