#include <doctest.h>

#include "crosstopo/crossmap.hpp"

using namespace crosstopo;

namespace {

GridFn sample_map(int n, const std::function<Point(const Point&)>& f) {
  GridFn g;
  g.n = n;
  g.image.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      g.image.push_back(f(g.domain_center(col, row)));
    }
  }
  return g;
}

}  // namespace

TEST_CASE("check_cross_property") {
  // (x, y) -> (x, 0): shares x with every center
  const GridFn proj = sample_map(4, [](const Point& p) {
    return Point{p.x, Rat(0)};
  });
  CHECK(check_cross_property(proj).ok);

  // identity shares both coordinates at every resolution
  for (int n : {1, 2, 3, 4, 8}) {
    const GridFn id = sample_map(n, [](const Point& p) { return p; });
    CHECK(check_cross_property(id).ok);
  }

  // a shifted map shares neither coordinate at the first cell
  const GridFn shift = sample_map(4, [](const Point& p) {
    return Point{std::min(p.x + rat(1, 4), Rat(1)),
                 std::min(p.y + rat(1, 4), Rat(1))};
  });
  const auto r = check_cross_property(shift);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.col == 0);
  CHECK(r.violation.row == 0);
}

TEST_CASE("classify_cross_mapping on the collapse examples") {
  // (x, y) -> (x, 0) with B = {0}: a row collapse even with A empty
  const GridFn proj = sample_map(4, [](const Point& p) {
    return Point{p.x, Rat(0)};
  });
  const auto row = classify_cross_mapping(proj, {}, {Rat(0)});
  CHECK(row.kind == ClassifyResult::Kind::row_collapse);
  CHECK(row.level == Rat(0));
  CHECK_FALSE(row.both_collapse);

  // (x, y) -> (1/2, y) with A = {1/2}: a column collapse
  const GridFn col = sample_map(4, [](const Point& p) {
    return Point{rat(1, 2), p.y};
  });
  const auto cc = classify_cross_mapping(col, {rat(1, 2)}, {});
  CHECK(cc.kind == ClassifyResult::Kind::column_collapse);
  CHECK(cc.level == rat(1, 2));

  // the identity's image leaves cross(A x B)
  const GridFn id = sample_map(8, [](const Point& p) { return p; });
  const auto bad = classify_cross_mapping(id, {rat(1, 2)}, {rat(1, 2)});
  CHECK(bad.kind == ClassifyResult::Kind::violation);
  CHECK(bad.violation_kind == "image");

  // a constant map into A x B collapses both ways (it must still be a
  // cross-mapping, which pins it to cells whose center shares a
  // coordinate); columns win the tie and the report notes both
  const GridFn constant = sample_map(1, [](const Point&) {
    return Point{rat(1, 2), rat(1, 3)};
  });
  const auto both = classify_cross_mapping(constant, {rat(1, 2)},
                                           {rat(1, 3)});
  CHECK(both.kind == ClassifyResult::Kind::column_collapse);
  CHECK(both.both_collapse);
}

TEST_CASE("classify flags raster-continuity violations first") {
  GridFn jump = sample_map(2, [](const Point& p) {
    return Point{p.x, Rat(0)};
  });
  jump.image[3] = Point{Rat(1), Rat(1)};  // far from its neighbors
  const auto r = classify_cross_mapping(jump, {}, {Rat(0), Rat(1)});
  CHECK(r.kind == ClassifyResult::Kind::violation);
  CHECK(r.violation_kind == "continuity");
}

TEST_CASE("enumeration at N=1: single cell into the allowed codomain") {
  // center (1/2,1/2); with A = B = {1/2} the only allowed codomain points
  // on cross(A x B) sharing a coordinate with the center are on its cross
  std::vector<GridFn> out;
  const auto count = enumerate_cross_mappings(
      1, {rat(1, 2)}, {rat(1, 2)},
      [&](const GridFn& f) { out.push_back(f); });
  CHECK(count == out.size());
  CHECK(count == 1);  // centers coincide with the levels: only (1/2,1/2)
  CHECK(out[0].image[0] == point(1, 2, 1, 2));

  // with distinct levels each axis offers one more anchored value
  const auto count2 = count_cross_mappings(1, {rat(1, 4)}, {rat(3, 4)});
  // allowed: (1/4, 1/2), (1/4, 3/4), (1/2, 3/4) — all share a coordinate
  // with the center (1/2, 1/2)? (1/4,3/4) does not; continuity is vacuous
  CHECK(count2 == 2);
}

TEST_CASE("enumeration with empty levels yields the empty stream") {
  CHECK(count_cross_mappings(2, {}, {}) == 0);
}

TEST_CASE("enumeration respects the budget cap") {
  EnumerationLimits limits;
  limits.max_yield = 3;
  CHECK_THROWS_AS(count_cross_mappings(2, {rat(1, 2)}, {rat(1, 2)}, limits),
                  EnumerationOverflow);
}

TEST_CASE("golden enumeration counts stay stable") {
  // frozen after the first exhaustive run
  CHECK(count_cross_mappings(2, {rat(1, 2)}, {rat(1, 2)}) == 16);
  CHECK(count_cross_mappings(2, {rat(1, 2)}, {}) == 1);
  CHECK(count_cross_mappings(2, {}, {rat(1, 2)}) == 1);
  CHECK(count_cross_mappings(3, {rat(1, 2)}, {}) == 8);
  CHECK(count_cross_mappings(3, {rat(1, 2)}, {rat(1, 2)}) == 1168);
  CHECK(count_cross_mappings(2, {rat(1, 4), rat(3, 4)}, {rat(1, 2)}) == 256);
}

TEST_CASE("enumerated maps never fail the hypothesis checks") {
  // enumerate filters continuity, the cross property and image
  // containment, so classify can only return a collapse or a dichotomy
  // violation; one-sided level sets always collapse
  enumerate_cross_mappings(3, {rat(1, 2)}, {}, [&](const GridFn& f) {
    const auto r = classify_cross_mapping(f, {rat(1, 2)}, {});
    REQUIRE(r.kind == ClassifyResult::Kind::column_collapse);
    for (const Point& q : f.image) CHECK(q.x == r.level);
  });
  enumerate_cross_mappings(2, {rat(1, 2)}, {rat(1, 2)},
                           [&](const GridFn& f) {
    const auto r = classify_cross_mapping(f, {rat(1, 2)}, {rat(1, 2)});
    if (r.kind == ClassifyResult::Kind::violation) {
      CHECK(r.violation_kind == "dichotomy");
    } else {
      for (const Point& q : f.image) {
        if (r.kind == ClassifyResult::Kind::column_collapse) {
          CHECK(q.x == r.level);
        } else {
          CHECK(q.y == r.level);
        }
      }
    }
  });
}

TEST_CASE("the discrete continuity proxy admits dichotomy violations") {
  // With both level sets nonempty the 1/N jump bound lets a map trade the
  // column for the row near their crossing, so the collapse dichotomy can
  // fail on raster inputs even though every hypothesis check passes. This
  // pins the smallest such instance.
  std::uint64_t dichotomy = 0;
  enumerate_cross_mappings(2, {rat(1, 2)}, {rat(1, 2)},
                           [&](const GridFn& f) {
    const auto r = classify_cross_mapping(f, {rat(1, 2)}, {rat(1, 2)});
    if (r.kind == ClassifyResult::Kind::violation &&
        r.violation_kind == "dichotomy") {
      ++dichotomy;
    }
  });
  CHECK(dichotomy == 14);
}
