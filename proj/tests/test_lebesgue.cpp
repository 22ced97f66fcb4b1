#include <doctest.h>

#include "crosstopo/lebesgue.hpp"

#include <random>

using namespace crosstopo;

namespace {

PiecewiseMap whole_square(PieceTag tag) {
  return PiecewiseMap{{Piece{Rat(0), Rat(1), Rat(0), Rat(1), tag}}};
}

CandidateSeq constant_row_candidate(const Rat& level, int len) {
  CandidateSeq c;
  for (int i = 0; i < len; ++i) {
    c.maps.push_back(whole_square(PieceTag{true, level}));
  }
  return c;
}

// breadth-first dyadic enumeration: 0, 1/2, 1/4, 3/4, 1/8, 3/8, ...
Rat dyadic_sweep_value(int n) {
  if (n == 1) return Rat(0);
  int m = 1, count = 1;
  while (count + (1 << (m - 1)) < n) {
    count += 1 << (m - 1);
    ++m;
  }
  const int k = n - count;  // 1-based within level m
  return Rat(2 * k - 1) / Rat(1 << m);
}

CandidateSeq sweeping_rows_candidate(int len) {
  CandidateSeq c;
  for (int n = 1; n <= len; ++n) {
    c.maps.push_back(whole_square(PieceTag{true, dyadic_sweep_value(n)}));
  }
  return c;
}

}  // namespace

TEST_CASE("candidate validation catches cover defects") {
  CandidateSeq gaps;
  gaps.maps.push_back(PiecewiseMap{
      {Piece{Rat(0), rat(1, 2), Rat(0), Rat(1), PieceTag{true, Rat(0)}}}});
  CHECK_THROWS_WITH_AS(validate(gaps), doctest::Contains("uncovered"),
                       ValidationError);
  CandidateSeq overlap;
  overlap.maps.push_back(PiecewiseMap{
      {Piece{Rat(0), Rat(1), Rat(0), Rat(1), PieceTag{true, Rat(0)}},
       Piece{Rat(0), rat(3, 4), Rat(0), Rat(1), PieceTag{false, Rat(0)}}}});
  CHECK_THROWS_WITH_AS(validate(overlap), doctest::Contains("overlap"),
                       ValidationError);
}

TEST_CASE("piecewise evaluation: first matching piece wins on boundaries") {
  PiecewiseMap m{{Piece{Rat(0), rat(1, 2), Rat(0), Rat(1),
                        PieceTag{true, Rat(0)}},
                  Piece{rat(1, 2), Rat(1), Rat(0), Rat(1),
                        PieceTag{false, Rat(1)}}}};
  CHECK(eval(m, point(1, 4, 1, 3)) == point(1, 4, 0, 1));
  CHECK(eval(m, point(3, 4, 1, 3)) == point(1, 1, 1, 3));
  CHECK(eval(m, point(1, 2, 1, 3)) == point(1, 2, 0, 1));  // shared edge
}

TEST_CASE("refutation: constant row collapse fails at the classic probe") {
  const CandidateSeq c = constant_row_candidate(Rat(0), 12);
  const RefuteWitness w =
      refute_pointwise_identity(c, {point(1, 2, 1, 2)});
  CHECK(w.probe == point(1, 2, 1, 2));
  CHECK(w.reason == "free-coordinate-bounded-away");
  CHECK(w.delta == rat(1, 2));
  for (const Point& img : w.images) CHECK(img == point(1, 2, 0, 1));
  const WitnessReplay replay = replay_refutation(w);
  CHECK(replay.confirmed);
  CHECK(replay.method == "seqspec-fit+gamma-limit");
}

TEST_CASE("refutation: sweeping rows fail at a non-dyadic height") {
  const CandidateSeq c = sweeping_rows_candidate(24);
  const RefuteWitness w =
      refute_pointwise_identity(c, {point(1, 2, 1, 3)});
  CHECK(w.probe == point(1, 2, 1, 3));
  // the sweep never hits 1/3, so the error stays positive end to end
  CHECK(w.delta > 0);
  // images stay on the column through the probe
  for (const Point& img : w.images) CHECK(img.x == rat(1, 2));
  const WitnessReplay replay = replay_refutation(w);
  CHECK(replay.confirmed);
}

TEST_CASE("refutation: alternating rows witness by oscillation") {
  CandidateSeq c;
  for (int n = 0; n < 16; ++n) {
    c.maps.push_back(
        whole_square(PieceTag{true, n % 2 == 0 ? rat(1, 4) : rat(3, 4)}));
  }
  // at a probe on the first row the error vanishes every other step, so
  // only the recurring swing to the far row proves divergence
  const RefuteWitness w =
      refute_pointwise_identity(c, {point(1, 2, 1, 4)});
  CHECK(w.reason == "free-coordinate-oscillates");
  CHECK(w.delta == rat(1, 2));
  const WitnessReplay replay = replay_refutation(w);
  CHECK(replay.confirmed);
  CHECK(replay.method == "parity-split+gamma-limit");
}

TEST_CASE("refutation: every piecewise tag map differs from the identity "
          "on a full piece") {
  const CandidateSeq c = constant_row_candidate(rat(1, 4), 10);
  // auto probe search finds a witness without hints
  const RefuteWitness w = refute_pointwise_identity(c);
  CHECK(w.delta > 0);
  // and indeed every probe off the tag row already shows the gap
  for (const Rat& y : {rat(1, 2), rat(3, 4), rat(7, 8)}) {
    const Point p{rat(1, 3), y};
    CHECK(eval(c.maps[0], p) == Point{p.x, rat(1, 4)});
  }
}

TEST_CASE("refutation errors are explicit") {
  const CandidateSeq too_short = constant_row_candidate(Rat(0), 3);
  CHECK_THROWS_AS(refute_pointwise_identity(too_short),
                  InsufficientEvidence);
}

TEST_CASE("disjointify: already disjoint covers pass through") {
  const UltraModel m = make_ultra_model(4);
  std::vector<Clopen> cover;
  for (std::uint32_t q = 0; q < 4; ++q) {
    cover.push_back(clopen_from_cylinders(m, {Cylinder{2, q}}));
  }
  const auto parts = disjointify_cover(m, cover);
  REQUIRE(parts.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(parts[i].mask == cover[i].mask);
  CHECK(is_partition(m, parts));
}

TEST_CASE("disjointify: redundant cylinders are emptied in order") {
  const UltraModel m = make_ultra_model(3);
  const std::vector<Clopen> cover{
      clopen_from_cylinders(m, {Cylinder{1, 0}}),   // 0*
      clopen_from_cylinders(m, {Cylinder{2, 0}}),   // 00*
      clopen_from_cylinders(m, {Cylinder{1, 1}})};  // 1*
  const auto parts = disjointify_cover(m, cover);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].mask == cover[0].mask);
  CHECK(parts[1].empty());
  CHECK(parts[2].mask == cover[2].mask);
  CHECK(is_partition(m, parts));
}

TEST_CASE("disjointify: a single total set maps to itself") {
  const UltraModel m = make_ultra_model(3);
  const std::vector<Clopen> cover{clopen_from_cylinders(m, {Cylinder{0, 0}})};
  const auto parts = disjointify_cover(m, cover);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].total());
}

TEST_CASE("disjointify: uncovered points are reported with a witness") {
  const UltraModel m = make_ultra_model(3);
  const std::vector<Clopen> cover{clopen_from_cylinders(m, {Cylinder{1, 0}})};
  CHECK_THROWS_WITH_AS(disjointify_cover(m, cover), doctest::Contains("100"),
                       UncoveredPointError);
}

TEST_CASE("disjointify: random overlapping covers become partitions") {
  std::mt19937_64 rng(665544);
  for (int iter = 0; iter < 20; ++iter) {
    const int depth = 4 + static_cast<int>(rng() % 9);  // up to 12
    const UltraModel m = make_ultra_model(depth);
    std::vector<Clopen> cover;
    const int pieces = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < pieces; ++i) {
      std::vector<Cylinder> cyls;
      const int k = 1 + static_cast<int>(rng() % 3);
      for (int c = 0; c < k; ++c) {
        const int d = static_cast<int>(rng() % (depth + 1));
        cyls.push_back(Cylinder{d, static_cast<std::uint32_t>(
                                       rng() % (1u << d))});
      }
      cover.push_back(clopen_from_cylinders(m, cyls));
    }
    // force totality while keeping overlaps likely
    cover.push_back(clopen_from_cylinders(m, {Cylinder{1, 0}}));
    cover.push_back(clopen_from_cylinders(m, {Cylinder{1, 1}}));
    const auto parts = disjointify_cover(m, cover);
    CHECK(is_partition(m, parts));
    REQUIRE(parts.size() == cover.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::uint32_t code = 0; code < m.point_count(); ++code) {
        if (parts[i].mask[code]) CHECK(cover[i].mask[code]);  // refinement
      }
    }
  }
}

TEST_CASE("ultrametric basics") {
  const UltraModel m = make_ultra_model(4);
  CHECK(format_bits(parse_bits("0110", 4), 4) == "0110");
  CHECK(ultra_distance(parse_bits("0110", 4), parse_bits("0111", 4), 4) ==
        rat(1, 16));
  CHECK(ultra_distance(parse_bits("0110", 4), parse_bits("1110", 4), 4) ==
        rat(1, 2));
  CHECK(ultra_distance(3, 3, 4) == Rat(0));
  // ultrametric triangle inequality on all triples
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      for (std::uint32_t c = 0; c < 16; ++c) {
        CHECK(ultra_distance(a, c, 4) <=
              std::max(ultra_distance(a, b, 4), ultra_distance(b, c, 4)));
      }
    }
  }
  CHECK_THROWS_AS(make_ultra_model(0), ValidationError);
  CHECK_THROWS_AS(parse_bits("01", 4), ValidationError);
}

TEST_CASE("baire1 approximants: representatives and exactness levels") {
  const int depth = 6;
  const UltraModel m = make_ultra_model(depth);
  const SepOracle lip = builtin_oracle("lipschitz", depth);
  CHECK(check_lipschitz_declaration(lip, m));

  SUBCASE("level D reproduces the oracle exactly") {
    const auto fd = baire1_approximate(lip, m, depth);
    for (std::uint32_t x = 0; x < m.point_count(); x += 7) {
      CHECK(fd.representative_of(x) == x);
      CHECK(fd(x, rat(1, 3)) == lip.eval(x, rat(1, 3)));
    }
  }
  SUBCASE("depth-1 oracles are exact from level 1 on") {
    const SepOracle d1 = builtin_oracle("depth1", depth);
    const auto f1 = baire1_approximate(d1, m, 1);
    for (std::uint32_t x = 0; x < m.point_count(); ++x) {
      CHECK(f1(x, rat(2, 5)) == d1.eval(x, rat(2, 5)));
    }
  }
  SUBCASE("representatives converge in the ultrametric") {
    for (int n = 1; n <= depth; ++n) {
      const auto fn = baire1_approximate(lip, m, n);
      const Rat bound = Rat(1) / Rat(BigInt(1) << n);
      for (std::uint32_t x = 0; x < m.point_count(); ++x) {
        CHECK(ultra_distance(fn.representative_of(x), x, depth) <= bound);
      }
    }
  }
  SUBCASE("approximants are locally constant across each cylinder") {
    const auto f3 = baire1_approximate(lip, m, 3);
    for (std::uint32_t x = 0; x < m.point_count(); ++x) {
      for (std::uint32_t x2 = 0; x2 < m.point_count(); ++x2) {
        if ((x >> (depth - 3)) != (x2 >> (depth - 3))) continue;
        CHECK(f3(x, rat(1, 7)) == f3(x2, rat(1, 7)));
      }
    }
  }
  SUBCASE("levels outside the model are refused") {
    CHECK_THROWS_AS(baire1_approximate(lip, m, depth + 1), ValidationError);
    CHECK_THROWS_AS(baire1_approximate(lip, m, 0), ValidationError);
  }
}

TEST_CASE("pointwise convergence reports") {
  const int depth = 8;
  const UltraModel m = make_ultra_model(depth);
  std::vector<std::pair<std::uint32_t, Rat>> samples;
  for (std::uint32_t x : {0u, 1u, 37u, 200u, 255u}) {
    samples.push_back({x, rat(1, 3)});
    samples.push_back({x, rat(4, 5)});
  }
  SUBCASE("constant-in-x oracles have zero error at every level") {
    const auto report = verify_pointwise_convergence(
        builtin_oracle("constant-x", depth), m, depth, samples);
    for (const auto& s : report.samples) {
      for (const Rat& e : s.errors) CHECK(e == Rat(0));
    }
    CHECK(report.final_errors_zero);
  }
  SUBCASE("lipschitz oracles meet the analytic bound") {
    const auto report = verify_pointwise_convergence(
        builtin_oracle("lipschitz", depth), m, depth, samples);
    CHECK(report.all_lipschitz_ok);
    CHECK(report.final_errors_zero);
    for (const auto& s : report.samples) {
      CHECK(s.errors[4] <= rat(1, 32));  // e_5 <= 2^-5
    }
  }
}
