#include <doctest.h>

#include "crosstopo/raster.hpp"

using namespace crosstopo;

TEST_CASE("rasterize: full and empty sets") {
  const GridMask full = rasterize(square_desc(), 4);
  CHECK(full.popcount() == 16);
  const GridMask empty = rasterize(SetDesc{}, 4);
  CHECK(empty.popcount() == 0);
}

TEST_CASE("rasterize: thin sets vanish unless centers align") {
  // the vertical segment at x = 1/2 misses every center at N = 4 ...
  const SetDesc seg = vertical_segment(rat(1, 2), unit_closed());
  CHECK(rasterize(seg, 4).popcount() == 0);
  // ... and fills the middle column at N = 5, whose centers are odd/10
  const GridMask five = rasterize(seg, 5);
  CHECK(five.popcount() == 5);
  for (int row = 0; row < 5; ++row) CHECK(five.at(2, row));
}

TEST_CASE("rasterize rejects tiny resolutions") {
  CHECK_THROWS_AS(rasterize(square_desc(), 1), ValidationError);
}

TEST_CASE("connectivity of masks") {
  CHECK(is_connected(rasterize(square_desc(), 8)));
  CHECK(is_connected(rasterize(SetDesc{}, 4)));  // empty by convention

  GridMask corners;
  corners.n = 4;
  corners.cells.assign(16, 0);
  corners.set(0, 0, true);
  corners.set(3, 3, true);
  const ComponentLabels labels = label_components(corners);
  CHECK_FALSE(is_connected(corners));
  CHECK(labels.count == 2);
}

TEST_CASE("cross-superset rasters are connected (comb shape)") {
  // vertical teeth on every other center column plus one connecting row,
  // all center-aligned at N = 64
  SetDesc comb;
  const int n = 64;
  for (int i = 0; i < n; i += 2) {
    comb.parts.push_back(Segment{Axis::vertical, Rat(2 * i + 1) / Rat(2 * n),
                                 unit_closed()});
  }
  comb.parts.push_back(Segment{Axis::horizontal, Rat(65) / Rat(128),
                               unit_closed()});
  const GridMask mask = rasterize(comb, n);
  CHECK(mask.popcount() == 32 * 64 + 32);
  CHECK(is_connected(mask));
}

TEST_CASE("c1 component counts with punctures") {
  // the square minus interior punctures stays connected
  CHECK(c1_component_count(square_desc(), {point(1, 3, 1, 2)}, 64) == 1);
  CHECK(c1_component_count(square_desc(),
                           {point(1, 3, 1, 2), point(2, 7, 3, 5),
                            point(9, 11, 4, 9)},
                           64) == 1);
  // a center-aligned horizontal segment splits at its punctured midpoint
  const SetDesc seg = horizontal_segment(rat(65, 128), unit_closed());
  CHECK(c1_component_count(seg, {point(1, 2, 65, 128)}, 64) == 2);
  // the spec-level segment at exactly 1/2 is invisible at even N
  // (center-sampling caveat): zero cells, zero components
  const SetDesc invisible = horizontal_segment(rat(1, 2), unit_closed());
  CHECK(c1_component_count(invisible, {point(1, 2, 1, 2)}, 64) == 0);
}

TEST_CASE("determinism and resolution monotonicity of the puncture suite") {
  const std::vector<Point> punctures{point(1, 3, 1, 2), point(2, 7, 3, 5)};
  for (int n : {16, 32, 64, 128}) {
    CHECK(c1_component_count(square_desc(), punctures, n) == 1);
  }
  const GridMask a = rasterize(square_desc(), 16);
  const GridMask b = rasterize(square_desc(), 16);
  CHECK(a.cells == b.cells);
  CHECK(label_components(a).label == label_components(b).label);
}
