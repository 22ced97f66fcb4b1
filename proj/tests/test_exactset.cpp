#include <doctest.h>

#include "crosstopo/arrangement.hpp"

#include <random>

using namespace crosstopo;

namespace {

Rat random_rat(std::mt19937_64& rng, int max_den = 12) {
  const auto den = static_cast<long long>(rng() % max_den + 1);
  const auto num = static_cast<long long>(rng() % (den + 1));
  return rat(num, den);
}

Point random_point(std::mt19937_64& rng) {
  return Point{random_rat(rng), random_rat(rng)};
}

}  // namespace

TEST_CASE("rational parse and format") {
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("2/4") == rat(1, 2));
  CHECK(parse_rat("7") == rat(7));
  CHECK(format_rat(rat(1, 2)) == "1/2");
  CHECK(format_rat(rat(2)) == "2/1");
  CHECK(format_rat(rat(0)) == "0/1");
  CHECK_THROWS_AS(parse_rat("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rat("x"), ValidationError);
  CHECK_THROWS_AS(parse_rat("1/2/3"), ValidationError);
  CHECK(floor_rat(rat(-7, 2)) == -4);
  CHECK(floor_rat(rat(7, 2)) == 3);
  CHECK(next_integer_above(rat(3)) == 4);
  CHECK(next_integer_above(rat(5, 2)) == 3);
}

TEST_CASE("contains on the basic primitives") {
  // interior point of the closed square
  CHECK(contains(square_desc(), point(1, 2, 1, 2)));
  // n = 3 instance of the diagonal trace z_n = (1/n, 1/n)
  SeqSpec diag;
  diag.tail_x = CoordFormula{Rat(0), Rat(1), Rat(0)};
  diag.tail_y = CoordFormula{Rat(0), Rat(1), Rat(0)};
  CHECK(contains(trace_desc(diag), point(1, 3, 1, 3)));
  CHECK_FALSE(contains(trace_desc(diag), point(1, 3, 1, 4)));
  // boundary of the open square is excluded
  CHECK_FALSE(contains(open_square_desc(), point(0, 1, 1, 2)));
  CHECK(contains(open_square_desc(), point(1, 3, 2, 3)));
}

TEST_CASE("contains respects deletions") {
  SetDesc s = square_desc();
  s.deletions.push_back(point(1, 3, 2, 5));
  CHECK_FALSE(contains(s, point(1, 3, 2, 5)));
  CHECK(contains(s, point(1, 3, 1, 5)));
}

TEST_CASE("malformed descriptions are rejected with the primitive named") {
  SetDesc bad;
  bad.parts.push_back(Box{Interval{rat(3, 4), rat(1, 4), true, true},
                          unit_closed()});
  CHECK_THROWS_WITH_AS(validate(bad),
                       doctest::Contains("parts[0]"), ValidationError);
  SetDesc open_degenerate;
  open_degenerate.parts.push_back(
      Segment{Axis::vertical, rat(1, 2),
              Interval{rat(1, 3), rat(1, 3), false, true}});
  CHECK_THROWS_AS(validate(open_degenerate), ValidationError);
  SetDesc outside;
  outside.parts.push_back(Segment{Axis::vertical, rat(3, 2), unit_closed()});
  CHECK_THROWS_AS(validate(outside), ValidationError);
}

TEST_CASE("tau-openness on the catalog examples") {
  CHECK(is_tau_open(open_square_desc()));
  // a one-dimensional cross is never open in the product topology
  SetDesc cross{{Segment{Axis::vertical, Rat(0), unit_closed()},
                 Segment{Axis::horizontal, Rat(0), unit_closed()}},
                {}};
  CHECK_FALSE(is_tau_open(cross));
  // the square minus one point stays open (relative to itself)
  SetDesc punctured = square_desc();
  punctured.deletions.push_back(point(1, 2, 1, 2));
  CHECK(is_tau_open(punctured));
  // the full closed square is open relative to itself
  CHECK(is_tau_open(square_desc()));
  // a half-open box with its closed edge inside the square is not open,
  // while anchoring the closed edge on the ambient boundary keeps it open
  SetDesc half{{Box{Interval{rat(1, 4), rat(1, 2), true, false},
                    unit_closed()}},
               {}};
  CHECK_FALSE(is_tau_open(half));
  SetDesc boundary_half{{Box{Interval{Rat(0), rat(1, 2), true, false},
                             unit_closed()}},
                        {}};
  CHECK(is_tau_open(boundary_half));
}

TEST_CASE("cross_of_point and cross_of_finite") {
  const CrossSet c0 = cross_of_point(point(0, 1, 0, 1));
  CHECK(c0.cols == std::vector<Rat>{Rat(0)});
  CHECK(c0.rows == std::vector<Rat>{Rat(0)});

  const CrossSet ca =
      cross_of_finite({point(0, 1, 0, 1), point(1, 2, 1, 3)});
  CHECK(ca.cols == std::vector<Rat>{Rat(0), rat(1, 2)});
  CHECK(ca.rows == std::vector<Rat>{Rat(0), rat(1, 3)});

  CHECK(cross_of_finite({}).empty());
  CHECK(ca.contains(point(1, 2, 7, 8)));     // on the column x = 1/2
  CHECK(ca.contains(point(9, 10, 1, 3)));     // on the row y = 1/3
  CHECK_FALSE(ca.contains(point(1, 4, 1, 4)));
}

TEST_CASE("cross_of_finite distributes over unions") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Point> a, b, both;
    const int na = static_cast<int>(rng() % 5);
    const int nb = static_cast<int>(rng() % 5);
    for (int i = 0; i < na; ++i) a.push_back(random_point(rng));
    for (int i = 0; i < nb; ++i) b.push_back(random_point(rng));
    both = a;
    both.insert(both.end(), b.begin(), b.end());
    CHECK(cross_of_finite(both) ==
          cross_of_finite(a).united(cross_of_finite(b)));
  }
}

TEST_CASE("contains agrees with primitive-wise membership") {
  std::mt19937_64 rng(77001);
  SetDesc s;
  s.parts.push_back(Box{Interval{rat(1, 4), rat(3, 4), true, false},
                        Interval{Rat(0), rat(1, 2), true, true}});
  s.parts.push_back(Segment{Axis::horizontal, rat(2, 3),
                            Interval{rat(1, 8), rat(7, 8), true, true}});
  s.parts.push_back(SinglePoint{point(1, 10, 9, 10)});
  SeqSpec seq;
  seq.tail_x = CoordFormula{rat(1, 2), rat(1, 4), Rat(1)};
  seq.tail_y = CoordFormula{rat(1, 3), Rat(0), Rat(0)};
  s.parts.push_back(SeqTrace{seq});
  s.deletions.push_back(point(1, 2, 1, 4));
  validate(s);
  for (int iter = 0; iter < 500; ++iter) {
    const Point p = random_point(rng);
    bool in_any = false;
    for (const Primitive& prim : s.parts) {
      if (primitive_contains(prim, p)) in_any = true;
    }
    CHECK(contains(s, p) == (in_any && !is_deleted(s, p)));
  }
  // deleted point is inside a primitive but not the set
  CHECK(primitive_contains(s.parts[0], point(1, 2, 1, 4)));
  CHECK_FALSE(contains(s, point(1, 2, 1, 4)));
}

TEST_CASE("tau-open sets yield closed-box witnesses at member points") {
  std::mt19937_64 rng(5150);
  std::vector<SetDesc> catalog;
  catalog.push_back(open_square_desc());
  catalog.push_back(square_desc());
  SetDesc punctured = square_desc();
  punctured.deletions.push_back(point(1, 3, 1, 7));
  catalog.push_back(punctured);
  SetDesc two_boxes{{Box{Interval{Rat(0), rat(1, 2), true, true}, unit_closed()},
                     Box{Interval{rat(1, 2), Rat(1), false, true},
                         unit_closed()}},
                    {}};
  catalog.push_back(two_boxes);
  for (const SetDesc& s : catalog) {
    REQUIRE(is_tau_open(s));
    const Arrangement arr(s);
    int witnesses = 0;
    for (int iter = 0; iter < 200 && witnesses < 50; ++iter) {
      const Point p = random_point(rng);
      if (!contains(s, p)) continue;
      ++witnesses;
      const auto radius = arr.box_radius(p);
      REQUIRE_MESSAGE(radius.has_value(),
                      "member point must have a box radius: "
                          << format_point(p));
      CHECK(*radius > 0);
      CHECK(closed_box_inside(s, p, *radius));
    }
    CHECK(witnesses > 0);
  }
}
