// Raster models of symbolic sets: center-sampled N x N masks, 4-connected
// component labeling, and puncture-aware component counting. Connectivity
// here is always the implemented mask predicate, a finite proxy; thin sets
// vanish unless a cell center lands on them (documented caveat).

#pragma once

#include "crosstopo/setdesc.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace crosstopo {

struct GridMask {
  int n = 0;                    // resolution, cells per axis
  std::vector<char> cells;      // row-major, index = col + row * n
  std::string provenance;

  bool at(int col, int row) const {
    return cells[static_cast<std::size_t>(col + row * n)] != 0;
  }
  void set(int col, int row, bool v) {
    cells[static_cast<std::size_t>(col + row * n)] = v ? 1 : 0;
  }
  std::size_t popcount() const;
};

/// Center of cell (col, row): ((2 col + 1)/(2N), (2 row + 1)/(2N)).
Point cell_center(int n, int col, int row);

/// Cell containing p (coordinates equal to 1 clamp to the last cell).
std::pair<int, int> cell_of(int n, const Point& p);

/// Center-sampled mask: cell set iff its center is a member of s. N >= 2.
GridMask rasterize(const SetDesc& s, int n);

struct ComponentLabels {
  int count = 0;
  std::vector<int> label;  // -1 for unset cells, else component id (0-based)
};

/// 4-connectivity labeling, deterministic row-major scan order.
ComponentLabels label_components(const GridMask& g);

/// Empty masks count as connected (0 components).
bool is_connected(const GridMask& g);

/// Rasterizes s, clears the cell containing each puncture, and counts
/// 4-connected components of what remains.
int c1_component_count(const SetDesc& s, const std::vector<Point>& punctures,
                       int n);

}  // namespace crosstopo
