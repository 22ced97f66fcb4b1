#include "crosstopo/json_io.hpp"

namespace crosstopo {

const Json& require_field(const Json& j, const std::string& key,
                          const std::string& path) {
  if (!j.is_object()) {
    throw ValidationError("expected an object", path);
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw ValidationError("missing field '" + key + "'",
                          path.empty() ? key : path + "." + key);
  }
  return *it;
}

namespace {

std::string sub(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

Json rat_to_json(const Rat& r) { return Json(format_rat(r)); }

Rat rat_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return Rat(BigInt(j.get<long long>()));
  }
  if (!j.is_string()) {
    throw ValidationError("expected a \"num/den\" string", path);
  }
  return parse_rat(j.get<std::string>(), path);
}

Json point_to_json(const Point& p) {
  return Json{{"x", format_rat(p.x)}, {"y", format_rat(p.y)}};
}

Point point_from_json(const Json& j, const std::string& path) {
  Point p{rat_from_json(require_field(j, "x", path), sub(path, "x")),
          rat_from_json(require_field(j, "y", path), sub(path, "y"))};
  validate_point(p, path);
  return p;
}

Json interval_to_json(const Interval& iv) {
  return Json{{"lo", format_rat(iv.lo)},
              {"hi", format_rat(iv.hi)},
              {"lo_closed", iv.lo_closed},
              {"hi_closed", iv.hi_closed}};
}

Interval interval_from_json(const Json& j, const std::string& path) {
  Interval iv;
  iv.lo = rat_from_json(require_field(j, "lo", path), sub(path, "lo"));
  iv.hi = rat_from_json(require_field(j, "hi", path), sub(path, "hi"));
  iv.lo_closed = j.value("lo_closed", true);
  iv.hi_closed = j.value("hi_closed", true);
  return iv;
}

Json crossset_to_json(const CrossSet& cs) {
  Json cols = Json::array(), rows = Json::array();
  for (const Rat& c : cs.cols) cols.push_back(format_rat(c));
  for (const Rat& r : cs.rows) rows.push_back(format_rat(r));
  return Json{{"cols", cols}, {"rows", rows}};
}

Json formula_to_json(const CoordFormula& f) {
  return Json{{"c", format_rat(f.c)},
              {"a", format_rat(f.a)},
              {"b", format_rat(f.b)}};
}

CoordFormula formula_from_json(const Json& j, const std::string& path) {
  CoordFormula f;
  f.c = rat_from_json(require_field(j, "c", path), sub(path, "c"));
  f.a = j.contains("a") ? rat_from_json(j["a"], sub(path, "a")) : Rat(0);
  f.b = j.contains("b") ? rat_from_json(j["b"], sub(path, "b")) : Rat(0);
  return f;
}

Json seqspec_to_json(const SeqSpec& s) {
  Json prefix = Json::array();
  for (const Point& p : s.prefix) prefix.push_back(point_to_json(p));
  return Json{{"prefix", prefix},
              {"tail_x", formula_to_json(s.tail_x)},
              {"tail_y", formula_to_json(s.tail_y)}};
}

SeqSpec seqspec_from_json(const Json& j, const std::string& path) {
  SeqSpec s;
  if (j.contains("prefix")) {
    const Json& pre = j["prefix"];
    if (!pre.is_array()) {
      throw ValidationError("expected an array", sub(path, "prefix"));
    }
    for (std::size_t i = 0; i < pre.size(); ++i) {
      s.prefix.push_back(point_from_json(pre[i], idx(sub(path, "prefix"), i)));
    }
  }
  s.tail_x = formula_from_json(require_field(j, "tail_x", path),
                               sub(path, "tail_x"));
  s.tail_y = formula_from_json(require_field(j, "tail_y", path),
                               sub(path, "tail_y"));
  validate_seq(s, path.empty() ? "seq" : path);
  return s;
}

Json setdesc_to_json(const SetDesc& s) {
  Json parts = Json::array();
  for (const Primitive& prim : s.parts) {
    parts.push_back(std::visit(
        [&](const auto& v) -> Json {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Box>) {
            return Json{{"kind", "box"},
                        {"x", interval_to_json(v.x)},
                        {"y", interval_to_json(v.y)}};
          } else if constexpr (std::is_same_v<T, Segment>) {
            return Json{{"kind", "segment"},
                        {"axis", v.axis == Axis::vertical ? "vertical"
                                                          : "horizontal"},
                        {"level", format_rat(v.level)},
                        {"span", interval_to_json(v.span)}};
          } else if constexpr (std::is_same_v<T, SinglePoint>) {
            return Json{{"kind", "point"}, {"p", point_to_json(v.p)}};
          } else {
            return Json{{"kind", "seq_trace"},
                        {"seq", seqspec_to_json(v.seq)}};
          }
        },
        prim));
  }
  Json deletions = Json::array();
  for (const Point& d : s.deletions) deletions.push_back(point_to_json(d));
  return Json{{"parts", parts}, {"deletions", deletions}};
}

SetDesc setdesc_from_json(const Json& j, const std::string& path) {
  SetDesc s;
  const Json& parts = require_field(j, "parts", path);
  if (!parts.is_array()) {
    throw ValidationError("expected an array", sub(path, "parts"));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string ppath = idx(sub(path, "parts"), i);
    const Json& pj = parts[i];
    const std::string kind =
        require_field(pj, "kind", ppath).get<std::string>();
    if (kind == "box") {
      s.parts.push_back(
          Box{interval_from_json(require_field(pj, "x", ppath),
                                 sub(ppath, "x")),
              interval_from_json(require_field(pj, "y", ppath),
                                 sub(ppath, "y"))});
    } else if (kind == "segment") {
      const std::string axis =
          require_field(pj, "axis", ppath).get<std::string>();
      if (axis != "vertical" && axis != "horizontal") {
        throw ValidationError("axis must be 'vertical' or 'horizontal'",
                              sub(ppath, "axis"));
      }
      s.parts.push_back(
          Segment{axis == "vertical" ? Axis::vertical : Axis::horizontal,
                  rat_from_json(require_field(pj, "level", ppath),
                                sub(ppath, "level")),
                  interval_from_json(require_field(pj, "span", ppath),
                                     sub(ppath, "span"))});
    } else if (kind == "point") {
      s.parts.push_back(SinglePoint{point_from_json(
          require_field(pj, "p", ppath), sub(ppath, "p"))});
    } else if (kind == "seq_trace") {
      s.parts.push_back(SeqTrace{seqspec_from_json(
          require_field(pj, "seq", ppath), sub(ppath, "seq"))});
    } else {
      throw ValidationError("unknown primitive kind '" + kind + "'",
                            sub(ppath, "kind"));
    }
  }
  if (j.contains("deletions")) {
    const Json& dels = j["deletions"];
    if (!dels.is_array()) {
      throw ValidationError("expected an array", sub(path, "deletions"));
    }
    for (std::size_t i = 0; i < dels.size(); ++i) {
      s.deletions.push_back(
          point_from_json(dels[i], idx(sub(path, "deletions"), i)));
    }
  }
  validate(s);
  return s;
}

Json gridfn_to_json(const GridFn& f) {
  Json image = Json::array();
  for (const Point& p : f.image) image.push_back(point_to_json(p));
  return Json{{"domain",
               Json{{"x_lo", format_rat(f.domain.x_lo)},
                    {"x_hi", format_rat(f.domain.x_hi)},
                    {"y_lo", format_rat(f.domain.y_lo)},
                    {"y_hi", format_rat(f.domain.y_hi)}}},
              {"n", f.n},
              {"image", image}};
}

GridFn gridfn_from_json(const Json& j, const std::string& path) {
  GridFn f;
  if (j.contains("domain")) {
    const Json& d = j["domain"];
    const std::string dp = sub(path, "domain");
    f.domain.x_lo = rat_from_json(require_field(d, "x_lo", dp), sub(dp, "x_lo"));
    f.domain.x_hi = rat_from_json(require_field(d, "x_hi", dp), sub(dp, "x_hi"));
    f.domain.y_lo = rat_from_json(require_field(d, "y_lo", dp), sub(dp, "y_lo"));
    f.domain.y_hi = rat_from_json(require_field(d, "y_hi", dp), sub(dp, "y_hi"));
  }
  const Json& nj = require_field(j, "n", path);
  if (!nj.is_number_integer()) {
    throw ValidationError("expected an integer", sub(path, "n"));
  }
  f.n = nj.get<int>();
  const Json& image = require_field(j, "image", path);
  if (!image.is_array()) {
    throw ValidationError("expected an array", sub(path, "image"));
  }
  for (std::size_t i = 0; i < image.size(); ++i) {
    f.image.push_back(point_from_json(image[i], idx(sub(path, "image"), i)));
  }
  validate(f);
  return f;
}

Json candidates_to_json(const CandidateSeq& c) {
  Json maps = Json::array();
  for (const PiecewiseMap& m : c.maps) {
    Json pieces = Json::array();
    for (const Piece& pc : m.pieces) {
      pieces.push_back(Json{{"rect",
                             Json{{"x_lo", format_rat(pc.x_lo)},
                                  {"x_hi", format_rat(pc.x_hi)},
                                  {"y_lo", format_rat(pc.y_lo)},
                                  {"y_hi", format_rat(pc.y_hi)}}},
                            {"tag", pc.tag.is_row ? "row" : "column"},
                            {"level", format_rat(pc.tag.level)}});
    }
    maps.push_back(Json{{"pieces", pieces}});
  }
  return Json{{"maps", maps}};
}

CandidateSeq candidates_from_json(const Json& j, const std::string& path) {
  CandidateSeq c;
  const Json& maps = require_field(j, "maps", path);
  if (!maps.is_array()) {
    throw ValidationError("expected an array", sub(path, "maps"));
  }
  for (std::size_t mi = 0; mi < maps.size(); ++mi) {
    const std::string mp = idx(sub(path, "maps"), mi);
    PiecewiseMap pm;
    const Json& pieces = require_field(maps[mi], "pieces", mp);
    if (!pieces.is_array()) {
      throw ValidationError("expected an array", sub(mp, "pieces"));
    }
    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
      const std::string pp = idx(sub(mp, "pieces"), pi);
      const Json& pj = pieces[pi];
      const Json& rect = require_field(pj, "rect", pp);
      Piece piece;
      piece.x_lo = rat_from_json(require_field(rect, "x_lo", pp),
                                 sub(pp, "rect.x_lo"));
      piece.x_hi = rat_from_json(require_field(rect, "x_hi", pp),
                                 sub(pp, "rect.x_hi"));
      piece.y_lo = rat_from_json(require_field(rect, "y_lo", pp),
                                 sub(pp, "rect.y_lo"));
      piece.y_hi = rat_from_json(require_field(rect, "y_hi", pp),
                                 sub(pp, "rect.y_hi"));
      const std::string tag = require_field(pj, "tag", pp).get<std::string>();
      if (tag != "row" && tag != "column") {
        throw ValidationError("tag must be 'row' or 'column'", sub(pp, "tag"));
      }
      piece.tag.is_row = tag == "row";
      piece.tag.level =
          rat_from_json(require_field(pj, "level", pp), sub(pp, "level"));
      pm.pieces.push_back(piece);
    }
    c.maps.push_back(std::move(pm));
  }
  validate(c);
  return c;
}

// ---------------------------------------------------------------------------
// result payloads
// ---------------------------------------------------------------------------

Json discrete_result_to_json(const DiscreteResult& r) {
  if (r.certified()) {
    return Json{{"verdict", "certificate"},
                {"certificate",
                 Json{{"pairs_checked", r.certificate->pairs_checked},
                      {"tail_note", r.certificate->tail_note}}}};
  }
  const auto& ce = *r.counterexample;
  return Json{{"verdict", "counterexample"},
              {"witness", Json{{"coordinate", std::string(1, ce.coordinate)},
                               {"value", format_rat(ce.value)},
                               {"first", ce.first},
                               {"second", ce.second}}}};
}

Json coincidence_to_json(const Coincidence& c) {
  Json log = Json::array();
  for (const std::string& line : c.replay_log) log.push_back(line);
  return Json{{"verdict", "coincidence"},
              {"u", Json{{"lo", format_rat(c.u.lo)}, {"hi", format_rat(c.u.hi)}}},
              {"v", Json{{"lo", format_rat(c.v.lo)}, {"hi", format_rat(c.v.hi)}}},
              {"c", point_to_json(c.c)},
              {"replay_log", log}};
}

Json compact_result_to_json(const GammaCompactResult& r) {
  if (const auto* cert = std::get_if<GammaCompactCert>(&r)) {
    Json cover = Json::array();
    for (const Point& p : cert->cross_cover) cover.push_back(point_to_json(p));
    Json notes = Json::array();
    for (const std::string& n : cert->compact_witness) notes.push_back(n);
    return Json{{"verdict", "certificate"},
                {"certificate",
                 Json{{"compact_witness", notes}, {"cross_cover", cover}}}};
  }
  const auto& ref = std::get<GammaCompactRefusal>(r);
  return Json{{"verdict", "refusal"},
              {"witness", Json{{"failed_condition", ref.failed_condition},
                               {"reason", ref.reason}}}};
}

Json gamma_limit_to_json(const GammaLimitResult& r) {
  if (r.converges) {
    return Json{{"verdict", "converges"},
                {"certificate",
                 Json{{"limit", point_to_json(r.converges->limit)},
                      {"tail_index", r.converges->tail_index}}}};
  }
  Json detail = Json::array();
  for (const std::string& d : r.diverges->detail) detail.push_back(d);
  return Json{{"verdict", "diverges"},
              {"witness", Json{{"kind", r.diverges->witness_kind},
                               {"detail", detail}}}};
}

Json classify_to_json(const ClassifyResult& r) {
  Json cells = Json::array();
  for (const CellRef& c : r.witness_cells) {
    cells.push_back(Json{{"col", c.col}, {"row", c.row}});
  }
  switch (r.kind) {
    case ClassifyResult::Kind::row_collapse:
      return Json{{"verdict", "row-collapse"},
                  {"certificate", Json{{"level", format_rat(r.level)},
                                       {"both_collapse", r.both_collapse}}}};
    case ClassifyResult::Kind::column_collapse:
      return Json{{"verdict", "column-collapse"},
                  {"certificate", Json{{"level", format_rat(r.level)},
                                       {"both_collapse", r.both_collapse}}}};
    default:
      return Json{{"verdict", "violation"},
                  {"witness",
                   Json{{"kind", r.violation_kind}, {"cells", cells}}}};
  }
}

Json refute_witness_to_json(const RefuteWitness& w,
                            const WitnessReplay& replay) {
  Json images = Json::array();
  for (const Point& p : w.images) images.push_back(point_to_json(p));
  return Json{{"verdict", "witness"},
              {"witness", Json{{"probe", point_to_json(w.probe)},
                               {"start_index", w.start_index},
                               {"reason", w.reason},
                               {"delta", format_rat(w.delta)},
                               {"images", images}}},
              {"replay", Json{{"confirmed", replay.confirmed},
                              {"method", replay.method},
                              {"detail", replay.detail}}}};
}

Json convergence_report_to_json(const ConvergenceReport& r, int model_depth) {
  Json samples = Json::array();
  for (const ConvergenceSample& s : r.samples) {
    Json errs = Json::array();
    for (const Rat& e : s.errors) errs.push_back(format_rat(e));
    samples.push_back(Json{{"x", format_bits(s.x, model_depth)},
                           {"y", format_rat(s.y)},
                           {"errors", errs},
                           {"envelope_monotone", s.envelope_monotone},
                           {"lipschitz_bound_ok", s.lipschitz_bound_ok}});
  }
  return Json{{"verdict", "report"},
              {"n_max", r.n_max},
              {"final_errors_zero", r.final_errors_zero},
              {"all_lipschitz_ok", r.all_lipschitz_ok},
              {"samples", samples}};
}

Json components_to_json(const GridMask& mask, const ComponentLabels& labels) {
  Json rows = Json::array();
  for (int row = 0; row < mask.n; ++row) {
    Json r = Json::array();
    for (int col = 0; col < mask.n; ++col) {
      r.push_back(labels.label[static_cast<std::size_t>(col + row * mask.n)]);
    }
    rows.push_back(r);
  }
  return Json{{"verdict", "report"},
              {"n", mask.n},
              {"cells_set", mask.popcount()},
              {"component_count", labels.count},
              {"labels", rows}};
}

Json make_report(const std::string& subcommand, const std::string& verdict) {
  return Json{{"schema", "crosstopo-report/1"},
              {"subcommand", subcommand},
              {"verdict", verdict}};
}

}  // namespace crosstopo
