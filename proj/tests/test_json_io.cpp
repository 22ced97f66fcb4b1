#include <doctest.h>

#include "crosstopo/json_io.hpp"

#include <random>

using namespace crosstopo;

namespace {

Rat rnd_rat(std::mt19937_64& rng) {
  const auto den = static_cast<long long>(rng() % 10 + 1);
  return rat(static_cast<long long>(rng() % (den + 1)), den);
}

SetDesc random_setdesc(std::mt19937_64& rng) {
  SetDesc s;
  const int parts = static_cast<int>(rng() % 4) + 1;
  for (int i = 0; i < parts; ++i) {
    switch (rng() % 4) {
      case 0: {
        Rat a = rnd_rat(rng), b = rnd_rat(rng);
        if (a > b) std::swap(a, b);
        Rat c = rnd_rat(rng), d = rnd_rat(rng);
        if (c > d) std::swap(c, d);
        const bool deg_x = a == b, deg_y = c == d;
        s.parts.push_back(Box{Interval{a, b, true, deg_x ? true : rng() % 2 == 0},
                              Interval{c, d, true, deg_y ? true : rng() % 2 == 0}});
        break;
      }
      case 1: {
        Rat a = rnd_rat(rng), b = rnd_rat(rng);
        if (a > b) std::swap(a, b);
        if (a == b) b = a < 1 ? Rat(1) : Rat(a);
        if (a == b) a = Rat(0);
        s.parts.push_back(Segment{rng() % 2 == 0 ? Axis::vertical
                                                 : Axis::horizontal,
                                  rnd_rat(rng), Interval{a, b, true, true}});
        break;
      }
      case 2:
        s.parts.push_back(SinglePoint{Point{rnd_rat(rng), rnd_rat(rng)}});
        break;
      default: {
        SeqSpec seq;
        seq.tail_x = CoordFormula{rat(1, 2), rat(1, 4), Rat(1)};
        seq.tail_y = CoordFormula{rnd_rat(rng), Rat(0), Rat(0)};
        s.parts.push_back(SeqTrace{seq});
        break;
      }
    }
  }
  if (rng() % 2 == 0) {
    s.deletions.push_back(Point{rnd_rat(rng), rnd_rat(rng)});
  }
  return s;
}

}  // namespace

TEST_CASE("set descriptions round-trip through JSON") {
  std::mt19937_64 rng(1234321);
  int trips = 0;
  for (int i = 0; i < 100; ++i) {
    const SetDesc s = random_setdesc(rng);
    try {
      validate(s);
    } catch (const ValidationError&) {
      continue;  // generator may produce empty intervals; skip those
    }
    ++trips;
    const Json j = setdesc_to_json(s);
    CHECK(setdesc_from_json(j) == s);
  }
  CHECK(trips > 50);
}

TEST_CASE("sequence specs round-trip through JSON") {
  SeqSpec seq;
  seq.prefix.push_back(point(1, 3, 2, 5));
  seq.tail_x = CoordFormula{rat(1, 2), rat(-1, 8), rat(3, 2)};
  seq.tail_y = CoordFormula{rat(1, 4), Rat(0), Rat(0)};
  const Json j = seqspec_to_json(seq);
  CHECK(seqspec_from_json(j, "seq") == seq);
}

TEST_CASE("grid functions round-trip through JSON") {
  GridFn f;
  f.n = 2;
  f.image = {point(1, 2, 1, 4), point(1, 2, 1, 4), point(1, 2, 3, 4),
             point(1, 2, 3, 4)};
  const Json j = gridfn_to_json(f);
  const GridFn back = gridfn_from_json(j);
  CHECK(back.n == f.n);
  CHECK(back.image == f.image);
}

TEST_CASE("candidate sequences round-trip through JSON") {
  CandidateSeq c;
  c.maps.push_back(PiecewiseMap{
      {Piece{Rat(0), Rat(1), Rat(0), Rat(1), PieceTag{true, rat(1, 3)}}}});
  c.maps.push_back(PiecewiseMap{
      {Piece{Rat(0), rat(1, 2), Rat(0), Rat(1), PieceTag{false, rat(1, 5)}},
       Piece{rat(1, 2), Rat(1), Rat(0), Rat(1), PieceTag{true, rat(4, 5)}}}});
  const Json j = candidates_to_json(c);
  const CandidateSeq back = candidates_from_json(j);
  REQUIRE(back.maps.size() == 2);
  CHECK(back.maps[1].pieces[0].tag.level == rat(1, 5));
}

TEST_CASE("parse errors carry field paths") {
  CHECK_THROWS_WITH_AS(
      setdesc_from_json(Json::parse(R"({"parts":[{"kind":"box"}]})")),
      doctest::Contains("parts[0]"), ValidationError);
  CHECK_THROWS_WITH_AS(
      setdesc_from_json(Json::parse(
          R"({"parts":[{"kind":"point","p":{"x":"1/0","y":"0/1"}}]})")),
      doctest::Contains("parts[0].p.x"), ValidationError);
  CHECK_THROWS_WITH_AS(
      setdesc_from_json(Json::parse(R"({"parts":[{"kind":"blob"}]})")),
      doctest::Contains("unknown primitive kind"), ValidationError);
  CHECK_THROWS_WITH_AS(
      point_from_json(Json::parse(R"({"x":"3/2","y":"0/1"})"), "p"),
      doctest::Contains("outside [0,1]"), ValidationError);
}

TEST_CASE("rationals serialize canonically") {
  CHECK(rat_to_json(rat(2, 4)).get<std::string>() == "1/2");
  CHECK(rat_to_json(Rat(3)).get<std::string>() == "3/1");
  CHECK(rat_from_json(Json(5), "") == Rat(5));  // bare integers accepted
}

TEST_CASE("report envelope carries schema, subcommand and verdict") {
  const Json r = make_report("gamma-open", "open");
  CHECK(r.at("schema").get<std::string>() == "crosstopo-report/1");
  CHECK(r.at("subcommand").get<std::string>() == "gamma-open");
  CHECK(r.at("verdict").get<std::string>() == "open");
}
