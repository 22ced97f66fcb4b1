#include <doctest.h>

#include "crosstopo/gammatop.hpp"

#include <random>

using namespace crosstopo;

namespace {

SeqSpec formula_seq(CoordFormula x, CoordFormula y) {
  SeqSpec s;
  s.tail_x = x;
  s.tail_y = y;
  return s;
}

// z_n = (1/(n+1), 1/(n+2)): injective in both coordinates, limit (0,0)
SeqSpec prop1_trace() {
  return formula_seq(CoordFormula{Rat(0), Rat(1), Rat(1)},
                     CoordFormula{Rat(0), Rat(1), Rat(2)});
}

// Brute-force raster probe: does any cross of radius eps (from a shrinking
// ladder) fit inside s at p, judging by dense arm sampling only?
bool raster_cross_probe(const SetDesc& s, const Point& p) {
  for (int k = 3; k <= 9; k += 2) {
    const Rat eps = Rat(1) / Rat(BigInt(1) << k);
    bool fits = true;
    for (int i = 1; i <= 16 && fits; ++i) {
      const Rat t = eps * i / 17;
      for (const Point q : {Point{p.x, p.y + t}, Point{p.x, p.y - t},
                            Point{p.x + t, p.y}, Point{p.x - t, p.y}}) {
        if (in_unit_interval(q.x) && in_unit_interval(q.y) &&
            !contains(s, q)) {
          fits = false;
          break;
        }
      }
    }
    if (fits) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("gamma-openness: product-open boxes stay open") {
  CHECK(is_gamma_open(open_square_desc()));
  CHECK(is_gamma_open(square_desc()));
}

TEST_CASE("gamma-openness: a single cross fails at its arm points") {
  const SetDesc s{{Segment{Axis::vertical, rat(1, 2),
                           Interval{Rat(0), Rat(1), false, false}},
                   Segment{Axis::horizontal, rat(1, 2),
                           Interval{Rat(0), Rat(1), false, false}}},
                  {}};
  CHECK_FALSE(is_gamma_open(s));
  // confirm with the raster probe at the arm point (1/2, 1/4): no
  // horizontal arm of any sampled radius stays inside
  CHECK(contains(s, point(1, 2, 1, 4)));
  CHECK_FALSE(raster_cross_probe(s, point(1, 2, 1, 4)));
  // the probe does accept the center, whose cross is genuinely inside
  CHECK(raster_cross_probe(s, point(1, 2, 1, 2)));
}

TEST_CASE("gamma-openness: complement of an injective-coordinate trace") {
  CHECK(is_gamma_open(trace_desc(prop1_trace()), GammaMode::complement));
  // with a constant x-tail the points pile up on a line and the complement
  // loses its vertical arm at the limit
  const SeqSpec on_line = formula_seq(CoordFormula{Rat(0), Rat(0), Rat(0)},
                                      CoordFormula{Rat(0), Rat(1), Rat(1)});
  CHECK_FALSE(is_gamma_open(trace_desc(on_line), GammaMode::complement));
}

TEST_CASE("verify_gamma_discrete on sequence specs") {
  const DiscreteResult cert = verify_gamma_discrete(prop1_trace());
  CHECK(cert.certified());

  // shared x coordinate in a finite list
  const DiscreteResult shared =
      verify_gamma_discrete(std::vector<Point>{point(0, 1, 0, 1),
                                               point(0, 1, 1, 1)});
  REQUIRE_FALSE(shared.certified());
  CHECK(shared.counterexample->coordinate == 'x');
  CHECK(shared.counterexample->value == Rat(0));

  // constant tail collapses all coordinates
  const DiscreteResult constant = verify_gamma_discrete(
      formula_seq(CoordFormula{rat(1, 2), Rat(0), Rat(0)},
                  CoordFormula{Rat(0), Rat(1), Rat(1)}));
  REQUIRE_FALSE(constant.certified());
  CHECK(constant.counterexample->coordinate == 'x');

  // a prefix point colliding with a tail value is caught
  SeqSpec with_prefix = prop1_trace();
  with_prefix.prefix.push_back(point(1, 4, 7, 8));  // x = 1/4 hits n = 3
  const DiscreteResult collide = verify_gamma_discrete(with_prefix);
  REQUIRE_FALSE(collide.certified());
  CHECK(collide.counterexample->coordinate == 'x');
  CHECK(collide.counterexample->value == rat(1, 4));
}

TEST_CASE("Prop 1 round trip: discrete trace => complement of every finite "
          "subset deletion stays gamma-open") {
  std::mt19937_64 rng(424242);
  const SeqSpec seq = prop1_trace();
  REQUIRE(verify_gamma_discrete(seq).certified());
  for (int iter = 0; iter < 20; ++iter) {
    SetDesc s = trace_desc(seq);
    const int dels = static_cast<int>(rng() % 4);
    for (int d = 0; d < dels; ++d) {
      const auto n = static_cast<std::int64_t>(rng() % 12 + 1);
      s.deletions.push_back(seq.at(n));
    }
    CHECK(is_gamma_open(s, GammaMode::complement));
  }
  // complements of finite subsets of the trace are open too
  for (int k = 1; k <= 4; ++k) {
    std::vector<Point> pts;
    for (std::int64_t n = 1; n <= k; ++n) pts.push_back(seq.at(n));
    CHECK(is_gamma_open(points_desc(pts), GammaMode::complement));
  }
}

TEST_CASE("local coincidence neighborhoods") {
  SUBCASE("singleton cross") {
    const Coincidence c = local_coincidence_neighborhood(
        {rat(1, 2)}, {rat(1, 2)}, point(1, 2, 1, 2));
    CHECK(c.u.lo == Rat(0));
    CHECK(c.u.hi == Rat(1));
    CHECK(c.v.lo == Rat(0));
    CHECK(c.v.hi == Rat(1));
    CHECK(c.c == point(1, 2, 1, 2));
  }
  SUBCASE("two columns, point on the first") {
    const Coincidence c = local_coincidence_neighborhood(
        {rat(1, 4), rat(3, 4)}, {rat(1, 2)}, point(1, 4, 1, 2));
    CHECK(c.u.lo == Rat(0));
    CHECK(c.u.hi == rat(1, 2));
    CHECK(c.v.lo == Rat(0));
    CHECK(c.v.hi == Rat(1));
    CHECK(c.c == point(1, 4, 1, 2));
  }
  SUBCASE("point on a column away from the row") {
    const Coincidence c = local_coincidence_neighborhood(
        {rat(1, 4), rat(3, 4)}, {rat(1, 2)}, point(3, 4, 1, 4));
    CHECK(c.u.lo == rat(1, 2));  // avoids 1/4
    CHECK(c.u.hi == Rat(1));
    CHECK(c.v.lo == Rat(0));
    CHECK(c.v.hi == rat(3, 8));  // avoids 1/2
    CHECK(c.c == point(3, 4, 1, 2));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(local_coincidence_neighborhood({}, {rat(1, 2)},
                                                   point(1, 2, 1, 2)),
                    ValidationError);
    CHECK_THROWS_AS(local_coincidence_neighborhood({rat(1, 4)}, {rat(1, 2)},
                                                   point(1, 3, 1, 3)),
                    ValidationError);
  }
}

TEST_CASE("gamma-compactness: characterization on the key examples") {
  SUBCASE("one-point cross is compact with a singleton cover") {
    const SetDesc s{{Segment{Axis::vertical, Rat(0), unit_closed()},
                     Segment{Axis::horizontal, Rat(0), unit_closed()}},
                    {}};
    const auto res = is_gamma_compact(s);
    const auto* cert = std::get_if<GammaCompactCert>(&res);
    REQUIRE(cert != nullptr);
    REQUIRE(cert->cross_cover.size() == 1);
    CHECK(cert->cross_cover[0] == point(0, 1, 0, 1));
    CHECK(cross_cover_includes(s, cert->cross_cover));
  }
  SUBCASE("the full square has interior and is refused") {
    const auto res = is_gamma_compact(square_desc());
    const auto* ref = std::get_if<GammaCompactRefusal>(&res);
    REQUIRE(ref != nullptr);
    CHECK(ref->failed_condition == 2);
  }
  SUBCASE("an open segment is not closed") {
    const SetDesc s{{Segment{Axis::vertical, Rat(0),
                             Interval{Rat(0), Rat(1), false, false}}},
                    {}};
    const auto res = is_gamma_compact(s);
    const auto* ref = std::get_if<GammaCompactRefusal>(&res);
    REQUIRE(ref != nullptr);
    CHECK(ref->failed_condition == 1);
  }
  SUBCASE("a compact but injective trace is refused on the cross condition") {
    SetDesc s = trace_desc(prop1_trace());
    s.parts.push_back(SinglePoint{point(0, 1, 0, 1)});  // add the limit
    const auto res = is_gamma_compact(s);
    const auto* ref = std::get_if<GammaCompactRefusal>(&res);
    REQUIRE(ref != nullptr);
    CHECK(ref->failed_condition == 2);
  }
  SUBCASE("a closed-box-minus-center is not closed") {
    SetDesc s = square_desc();
    s.deletions.push_back(point(1, 2, 1, 2));
    const auto res = is_gamma_compact(s);
    const auto* ref = std::get_if<GammaCompactRefusal>(&res);
    REQUIRE(ref != nullptr);
    CHECK(ref->failed_condition == 1);
  }
}

TEST_CASE("gamma-compact certificates replay and are minimal") {
  // two segments and an isolated point off their lines
  SetDesc s{{Segment{Axis::vertical, rat(1, 4), unit_closed()},
             Segment{Axis::horizontal, rat(2, 3),
                     Interval{Rat(0), rat(1, 2), true, true}},
             SinglePoint{point(7, 8, 1, 8)}},
            {}};
  const auto res = is_gamma_compact(s);
  const auto* cert = std::get_if<GammaCompactCert>(&res);
  REQUIRE(cert != nullptr);
  CHECK(cross_cover_includes(s, cert->cross_cover));
  for (std::size_t drop = 0; drop < cert->cross_cover.size(); ++drop) {
    std::vector<Point> reduced = cert->cross_cover;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(drop));
    CHECK_FALSE(cross_cover_includes(s, reduced));
    const auto off = point_off_reduced_cross(s, cert->cross_cover, drop);
    REQUIRE(off.has_value());
    CHECK(contains(s, *off));
    CHECK_FALSE(cross_of_finite(reduced).contains(*off));
  }
}

TEST_CASE("gamma limits of eventually-rational sequences") {
  SUBCASE("vertical approach converges to the foot of its column") {
    const auto r = gamma_limit(formula_seq(CoordFormula{Rat(0), Rat(0), Rat(0)},
                                           CoordFormula{Rat(0), Rat(1), Rat(1)}));
    REQUIRE(r.converges.has_value());
    CHECK(r.converges->limit == point(0, 1, 0, 1));
    CHECK(r.converges->tail_index == 1);
  }
  SUBCASE("diagonal sequences have no gamma limit") {
    const auto r = gamma_limit(prop1_trace());
    REQUIRE(r.diverges.has_value());
    CHECK(r.diverges->witness_kind == "injective-both-coordinates");
  }
  SUBCASE("constant sequences converge to themselves") {
    const auto r = gamma_limit(formula_seq(CoordFormula{rat(1, 2), Rat(0), Rat(0)},
                                           CoordFormula{rat(1, 2), Rat(0), Rat(0)}));
    REQUIRE(r.converges.has_value());
    CHECK(r.converges->limit == point(1, 2, 1, 2));
    CHECK(r.converges->tail_index == 1);
  }
  SUBCASE("prefix points off the cross push the tail index") {
    SeqSpec s = formula_seq(CoordFormula{Rat(0), Rat(0), Rat(0)},
                            CoordFormula{Rat(0), Rat(1), Rat(1)});
    s.prefix.push_back(point(1, 2, 1, 3));  // off cross((0,0))
    s.prefix.push_back(point(0, 1, 2, 3));  // on the column
    const auto r = gamma_limit(s);
    REQUIRE(r.converges.has_value());
    CHECK(r.converges->tail_index == 2);
  }
}

TEST_CASE("gamma limit consistency with cross membership and discreteness") {
  std::mt19937_64 rng(99118822);
  for (int iter = 0; iter < 100; ++iter) {
    const bool cx = rng() % 2 == 0;
    const bool cy = !cx && rng() % 3 == 0 ? false : rng() % 2 == 0;
    auto mk = [&](bool constant) {
      const Rat c = rat(static_cast<long long>(rng() % 3 + 1), 4);
      if (constant) return CoordFormula{c, Rat(0), Rat(0)};
      const long long sign = rng() % 2 == 0 ? 1 : -1;
      return CoordFormula{c, rat(sign, static_cast<long long>(rng() % 6 + 5)),
                          rat(static_cast<long long>(rng() % 3))};
    };
    const SeqSpec seq = formula_seq(mk(cx), mk(cy));
    const auto r = gamma_limit(seq);
    if (r.converges) {
      for (std::int64_t n = r.converges->tail_index;
           n < r.converges->tail_index + 30; ++n) {
        CHECK(on_cross(seq.at(n), r.converges->limit));
      }
    } else {
      // the divergence witness doubles as a discreteness certificate
      CHECK(verify_gamma_discrete(formula_seq(seq.tail_x, seq.tail_y))
                .certified());
    }
  }
}

TEST_CASE("tau-openness implies gamma-openness over the catalog") {
  std::vector<SetDesc> catalog;
  catalog.push_back(open_square_desc());
  catalog.push_back(square_desc());
  SetDesc punctured = square_desc();
  punctured.deletions.push_back(point(2, 5, 3, 7));
  catalog.push_back(punctured);
  catalog.push_back(cross_desc(point(1, 2, 1, 2)));
  catalog.push_back(trace_desc(prop1_trace()));
  catalog.push_back(
      SetDesc{{Segment{Axis::vertical, Rat(0),
                       Interval{Rat(0), Rat(1), false, false}}},
              {}});
  SetDesc half_plus_lid{{Box{Interval{Rat(0), Rat(1), true, true},
                             Interval{Rat(0), rat(1, 2), true, false}},
                         Segment{Axis::horizontal, rat(1, 2), unit_closed()}},
                        {}};
  catalog.push_back(half_plus_lid);
  for (const SetDesc& s : catalog) {
    if (is_tau_open(s)) CHECK(is_gamma_open(s));
  }
}

TEST_CASE("gamma-open soundness: member points admit verified cross radii") {
  std::mt19937_64 rng(31337);
  std::vector<SetDesc> open_catalog;
  open_catalog.push_back(open_square_desc());
  open_catalog.push_back(square_desc());
  SetDesc punctured = square_desc();
  punctured.deletions.push_back(point(1, 2, 1, 2));
  open_catalog.push_back(punctured);
  int checked = 0;
  for (const SetDesc& s : open_catalog) {
    REQUIRE(is_gamma_open(s));
    const Arrangement arr(s);
    for (int iter = 0; iter < 400 && checked < 1000; ++iter) {
      const Point p{rat(static_cast<long long>(rng() % 13), 12),
                    rat(static_cast<long long>(rng() % 13), 12)};
      if (!contains(s, p)) continue;
      ++checked;
      const auto eps = arr.cross_radius(p);
      REQUIRE(eps.has_value());
      CHECK(*eps > 0);
      CHECK(cross_arms_inside(s, p, *eps));
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("interior and closure membership queries") {
  const SetDesc cross = cross_desc(point(1, 2, 1, 2));
  // the center carries a cross inside the set, the arm points do not
  CHECK(gamma_interior_contains(cross, point(1, 2, 1, 2)));
  CHECK_FALSE(gamma_interior_contains(cross, point(1, 2, 1, 4)));
  CHECK_FALSE(gamma_interior_contains(cross, point(1, 8, 1, 8)));

  // closure in the cross sense: the trace accumulates at its limit only
  // through arms when a tail coordinate is constant
  const SetDesc vertical_trace =
      trace_desc(formula_seq(CoordFormula{Rat(0), Rat(0), Rat(0)},
                             CoordFormula{Rat(0), Rat(1), Rat(1)}));
  CHECK(gamma_closure_contains(vertical_trace, point(0, 1, 0, 1)));
  const SetDesc diag_trace = trace_desc(prop1_trace());
  CHECK_FALSE(gamma_closure_contains(diag_trace, point(0, 1, 0, 1)));
  // members are always in the closure
  CHECK(gamma_closure_contains(diag_trace, point(1, 2, 1, 3)));
}
