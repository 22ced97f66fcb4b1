#include "crosstopo/raster.hpp"

#include <algorithm>
#include <deque>

namespace crosstopo {

std::size_t GridMask::popcount() const {
  return static_cast<std::size_t>(
      std::count(cells.begin(), cells.end(), char(1)));
}

Point cell_center(int n, int col, int row) {
  return Point{Rat(2 * col + 1) / Rat(2 * n), Rat(2 * row + 1) / Rat(2 * n)};
}

std::pair<int, int> cell_of(int n, const Point& p) {
  auto clamp = [n](const Rat& v) {
    BigInt idx = floor_rat(v * n);
    if (idx >= n) idx = n - 1;
    if (idx < 0) idx = 0;
    return static_cast<int>(idx);
  };
  return {clamp(p.x), clamp(p.y)};
}

GridMask rasterize(const SetDesc& s, int n) {
  if (n < 2) {
    throw ValidationError("raster resolution must be at least 2, got " +
                          std::to_string(n));
  }
  validate(s);
  GridMask g;
  g.n = n;
  g.cells.assign(static_cast<std::size_t>(n) * n, 0);
  g.provenance = "center-sampled at N=" + std::to_string(n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      if (contains(s, cell_center(n, col, row))) g.set(col, row, true);
    }
  }
  return g;
}

ComponentLabels label_components(const GridMask& g) {
  ComponentLabels out;
  out.label.assign(g.cells.size(), -1);
  const int n = g.n;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      if (!g.at(col, row) || out.label[static_cast<std::size_t>(col + row * n)] >= 0) {
        continue;
      }
      const int id = out.count++;
      std::deque<std::pair<int, int>> queue{{col, row}};
      out.label[static_cast<std::size_t>(col + row * n)] = id;
      while (!queue.empty()) {
        const auto [c, r] = queue.front();
        queue.pop_front();
        const int dc[4] = {0, 0, -1, 1};
        const int dr[4] = {-1, 1, 0, 0};
        for (int k = 0; k < 4; ++k) {
          const int nc = c + dc[k], nr = r + dr[k];
          if (nc < 0 || nc >= n || nr < 0 || nr >= n) continue;
          const std::size_t idx = static_cast<std::size_t>(nc + nr * n);
          if (g.at(nc, nr) && out.label[idx] < 0) {
            out.label[idx] = id;
            queue.emplace_back(nc, nr);
          }
        }
      }
    }
  }
  return out;
}

bool is_connected(const GridMask& g) {
  return label_components(g).count <= 1;
}

int c1_component_count(const SetDesc& s, const std::vector<Point>& punctures,
                       int n) {
  GridMask g = rasterize(s, n);
  for (const Point& p : punctures) {
    const auto [col, row] = cell_of(n, p);
    g.set(col, row, false);
  }
  return label_components(g).count;
}

}  // namespace crosstopo
