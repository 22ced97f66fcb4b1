#include "crosstopo/suites.hpp"

#include "crosstopo/lebesgue.hpp"
#include "crosstopo/raster.hpp"

#include <algorithm>
#include <random>

namespace crosstopo {

bool SuiteReport::passed() const { return failed_count() == 0; }

int SuiteReport::failed_count() const {
  int n = 0;
  for (const SuiteCheck& c : checks) {
    if (!c.pass) ++n;
  }
  return n;
}

namespace {

using Rng = std::mt19937_64;

std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

Rat random_rat(Rng& rng, int max_den = 16) {
  const auto den = static_cast<long long>(below(rng, max_den) + 1);
  const auto num = static_cast<long long>(below(rng, den + 1));
  return rat(num, den);
}

void add_check(SuiteReport& report, const std::string& id, bool pass,
               std::string detail = "") {
  report.checks.push_back(SuiteCheck{id, pass, std::move(detail)});
}

// -----------------------------------------------------------------------
// prop1: injective sequences are discrete and their complements open
// -----------------------------------------------------------------------

CoordFormula random_injective_formula(Rng& rng) {
  const Rat c = rat(static_cast<long long>(below(rng, 9) + 4), 16);
  const long long sign = below(rng, 2) == 0 ? 1 : -1;
  const Rat a = rat(sign, static_cast<long long>(below(rng, 8) + 5));
  const Rat b = rat(static_cast<long long>(below(rng, 4)));
  return CoordFormula{c, a, b};
}

SeqSpec random_discrete_seq(Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    SeqSpec seq;
    seq.tail_x = random_injective_formula(rng);
    seq.tail_y = random_injective_formula(rng);
    const int prefix = static_cast<int>(below(rng, 3));
    for (int i = 0; i < prefix; ++i) {
      seq.prefix.push_back(
          Point{rat(static_cast<long long>(below(rng, 18) + 1), 19),
                rat(static_cast<long long>(below(rng, 22) + 1), 23)});
    }
    try {
      validate_seq(seq, "gen");
    } catch (const ValidationError&) {
      continue;
    }
    if (verify_gamma_discrete(seq).certified()) return seq;
  }
  throw std::logic_error("sequence generator failed to find a discrete spec");
}

SuiteReport suite_prop1(std::uint64_t seed) {
  SuiteReport report{"prop1", seed, {}};
  Rng rng(seed);
  int certified = 0, complements_open = 0;
  const int total = 200;
  for (int i = 0; i < total; ++i) {
    const SeqSpec seq = random_discrete_seq(rng);
    if (verify_gamma_discrete(seq).certified()) ++certified;
    if (is_gamma_open(trace_desc(seq), GammaMode::complement)) {
      ++complements_open;
    }
  }
  add_check(report, "discreteness-certified", certified == total,
            std::to_string(certified) + "/" + std::to_string(total));
  add_check(report, "complement-gamma-open", complements_open == total,
            std::to_string(complements_open) + "/" + std::to_string(total));
  return report;
}

// -----------------------------------------------------------------------
// prop4: compactness characterization against a brute-force oracle
// -----------------------------------------------------------------------

struct FeatureGrid {
  std::vector<Rat> xs, ys;  // feature values plus midpoints, sorted
};

FeatureGrid feature_grid(const SetDesc& s) {
  std::vector<Rat> fx{Rat(0), Rat(1)}, fy{Rat(0), Rat(1)};
  auto add_interval = [](std::vector<Rat>& axis, const Interval& iv) {
    insert_sorted_unique(axis, iv.lo);
    insert_sorted_unique(axis, iv.hi);
  };
  for (const Primitive& prim : s.parts) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Box>) {
            add_interval(fx, v.x);
            add_interval(fy, v.y);
          } else if constexpr (std::is_same_v<T, Segment>) {
            if (v.axis == Axis::vertical) {
              insert_sorted_unique(fx, v.level);
              add_interval(fy, v.span);
            } else {
              insert_sorted_unique(fy, v.level);
              add_interval(fx, v.span);
            }
          } else if constexpr (std::is_same_v<T, SinglePoint>) {
            insert_sorted_unique(fx, v.p.x);
            insert_sorted_unique(fy, v.p.y);
          } else {
            for (const Point& p : v.seq.prefix) {
              insert_sorted_unique(fx, p.x);
              insert_sorted_unique(fy, p.y);
            }
            insert_sorted_unique(fx, v.seq.tail_x.limit());
            insert_sorted_unique(fy, v.seq.tail_y.limit());
          }
        },
        prim);
  }
  for (const Point& d : s.deletions) {
    insert_sorted_unique(fx, d.x);
    insert_sorted_unique(fy, d.y);
  }
  FeatureGrid grid;
  auto with_midpoints = [](const std::vector<Rat>& vals) {
    std::vector<Rat> out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      out.push_back(vals[i]);
      if (i + 1 < vals.size()) out.push_back(midpoint(vals[i], vals[i + 1]));
    }
    return out;
  };
  grid.xs = with_midpoints(fx);
  grid.ys = with_midpoints(fy);
  return grid;
}

// Adherence by per-primitive closures: boxes and segments close their
// flags; traces with a moving tail add their limit. Single points and
// fully degenerate primitives never make q a limit point of the set.
bool oracle_adherent(const SetDesc& s, const Point& q) {
  for (const Primitive& prim : s.parts) {
    const bool hit = std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Box>) {
            if (v.x.degenerate() && v.y.degenerate()) return false;
            return q.x >= v.x.lo && q.x <= v.x.hi && q.y >= v.y.lo &&
                   q.y <= v.y.hi;
          } else if constexpr (std::is_same_v<T, Segment>) {
            if (v.span.degenerate()) return false;
            const Rat& along = v.axis == Axis::vertical ? q.y : q.x;
            const Rat& across = v.axis == Axis::vertical ? q.x : q.y;
            return across == v.level && along >= v.span.lo &&
                   along <= v.span.hi;
          } else if constexpr (std::is_same_v<T, SinglePoint>) {
            return false;
          } else {
            if (v.seq.tail_is_constant_point()) return false;
            return q == v.seq.tail_limit();
          }
        },
        prim);
    if (hit) return true;
  }
  return false;
}

bool oracle_closed(const SetDesc& s) {
  const FeatureGrid grid = feature_grid(s);
  for (const Rat& x : grid.xs) {
    for (const Rat& y : grid.ys) {
      const Point q{x, y};
      if (!contains(s, q) && oracle_adherent(s, q)) return false;
    }
  }
  return true;
}

bool oracle_lines_cover(const SetDesc& s, const std::vector<Rat>& cols,
                        const std::vector<Rat>& rows) {
  auto point_ok = [&](const Point& p) {
    if (!contains(s, p)) return true;  // deleted points need no cover
    return sorted_contains(cols, p.x) || sorted_contains(rows, p.y);
  };
  for (const Primitive& prim : s.parts) {
    const bool ok = std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Box>) {
            const bool dx = v.x.degenerate(), dy = v.y.degenerate();
            if (!dx && !dy) return false;  // interior defeats lines
            if (dx && dy) return point_ok(Point{v.x.lo, v.y.lo});
            if (dx) return sorted_contains(cols, v.x.lo);
            return sorted_contains(rows, v.y.lo);
          } else if constexpr (std::is_same_v<T, Segment>) {
            if (v.span.degenerate()) {
              const Point p = v.axis == Axis::vertical
                                  ? Point{v.level, v.span.lo}
                                  : Point{v.span.lo, v.level};
              return point_ok(p);
            }
            return v.axis == Axis::vertical ? sorted_contains(cols, v.level)
                                            : sorted_contains(rows, v.level);
          } else if constexpr (std::is_same_v<T, SinglePoint>) {
            return point_ok(v.p);
          } else {
            const SeqSpec& seq = v.seq;
            for (const Point& p : seq.prefix) {
              if (!point_ok(p)) return false;
            }
            const bool cx = seq.tail_x.constant(), cy = seq.tail_y.constant();
            if (!cx && !cy) return false;  // injective pair defeats lines
            if (cx && cy) return point_ok(seq.tail_limit());
            if (cx) return sorted_contains(cols, seq.tail_x.c);
            return sorted_contains(rows, seq.tail_y.c);
          }
        },
        prim);
    if (!ok) return false;
  }
  return true;
}

// Brute-force line-cover search up to `max_lines` lines drawn from the
// feature values of both axes.
bool oracle_coverable(const SetDesc& s, int max_lines) {
  struct Cand {
    bool is_col;
    Rat value;
  };
  const FeatureGrid grid = feature_grid(s);
  std::vector<Cand> cands;
  for (const Rat& v : grid.xs) cands.push_back(Cand{true, v});
  for (const Rat& v : grid.ys) cands.push_back(Cand{false, v});
  for (int k = 0; k <= max_lines && k <= static_cast<int>(cands.size());
       ++k) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    }
    while (true) {
      std::vector<Rat> cols, rows;
      for (std::size_t idx : pick) {
        if (cands[idx].is_col) {
          insert_sorted_unique(cols, cands[idx].value);
        } else {
          insert_sorted_unique(rows, cands[idx].value);
        }
      }
      if (oracle_lines_cover(s, cols, rows)) return true;
      if (k == 0) break;
      std::size_t i = static_cast<std::size_t>(k);
      while (i > 0 && pick[i - 1] ==
                          cands.size() - static_cast<std::size_t>(k) + i - 1) {
        --i;
      }
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < static_cast<std::size_t>(k); ++j) {
        pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return false;
}

std::vector<std::pair<std::string, SetDesc>> prop4_catalog() {
  std::vector<std::pair<std::string, SetDesc>> entries;
  auto add = [&](std::string name, SetDesc s) {
    entries.emplace_back(std::move(name), std::move(s));
  };
  // crosses
  add("cross-origin", cross_desc(point(0, 1, 0, 1)));
  add("cross-center", cross_desc(point(1, 2, 1, 2)));
  add("cross-offset", cross_desc(point(1, 3, 2, 3)));
  add("double-cross",
      SetDesc{{Segment{Axis::vertical, rat(1, 4), unit_closed()},
               Segment{Axis::vertical, rat(3, 4), unit_closed()},
               Segment{Axis::horizontal, rat(1, 2), unit_closed()}},
              {}});
  // boxes
  add("closed-square", square_desc());
  add("open-square", open_square_desc());
  add("small-closed-box",
      SetDesc{{Box{Interval{rat(1, 4), rat(3, 4), true, true},
                   Interval{rat(1, 3), rat(2, 3), true, true}}},
              {}});
  add("degenerate-vertical-box",
      SetDesc{{Box{Interval{rat(2, 5), rat(2, 5), true, true},
                   Interval{Rat(0), Rat(1), true, true}}},
              {}});
  add("degenerate-point-box",
      SetDesc{{Box{Interval{rat(1, 7), rat(1, 7), true, true},
                   Interval{rat(2, 7), rat(2, 7), true, true}}},
              {}});
  // segments
  add("closed-vertical-segment",
      vertical_segment(rat(1, 3), closed_interval(rat(1, 4), rat(3, 4))));
  add("closed-horizontal-segment",
      horizontal_segment(rat(5, 8), closed_interval(Rat(0), rat(1, 2))));
  add("open-vertical-segment",
      vertical_segment(Rat(0), open_interval(Rat(0), Rat(1))));
  add("half-open-segment",
      vertical_segment(rat(1, 2), Interval{Rat(0), rat(1, 2), true, false}));
  SetDesc patched =
      vertical_segment(rat(1, 2), Interval{Rat(0), rat(1, 2), true, false});
  patched.parts.push_back(SinglePoint{point(1, 2, 1, 2)});
  add("half-open-segment-patched", patched);
  // points
  add("single-point", points_desc({point(3, 7, 2, 9)}));
  add("four-points",
      points_desc({point(1, 8, 1, 8), point(3, 8, 5, 8), point(5, 8, 3, 8),
                   point(7, 8, 7, 8)}));
  add("empty-set", SetDesc{});
  // traces
  SeqSpec vertical_tail;
  vertical_tail.tail_x = CoordFormula{rat(1, 2), Rat(0), Rat(0)};
  vertical_tail.tail_y = CoordFormula{Rat(0), Rat(1), Rat(1)};
  add("vertical-trace-no-limit", trace_desc(vertical_tail));
  SetDesc vt_with_limit = trace_desc(vertical_tail);
  vt_with_limit.parts.push_back(SinglePoint{point(1, 2, 0, 1)});
  add("vertical-trace-with-limit", vt_with_limit);
  SeqSpec diag;
  diag.tail_x = CoordFormula{Rat(0), Rat(1), Rat(1)};
  diag.tail_y = CoordFormula{Rat(0), Rat(1), Rat(2)};
  add("diagonal-trace-no-limit", trace_desc(diag));
  SetDesc diag_with_limit = trace_desc(diag);
  diag_with_limit.parts.push_back(SinglePoint{point(0, 1, 0, 1)});
  add("diagonal-trace-with-limit", diag_with_limit);
  SeqSpec const_tail;
  const_tail.prefix.push_back(point(1, 4, 3, 4));
  const_tail.tail_x = CoordFormula{rat(2, 3), Rat(0), Rat(0)};
  const_tail.tail_y = CoordFormula{rat(1, 3), Rat(0), Rat(0)};
  add("constant-tail-trace", trace_desc(const_tail));
  {
    SeqSpec ht;
    ht.tail_x = CoordFormula{Rat(1), rat(-1, 2), Rat(0)};
    ht.tail_y = CoordFormula{rat(3, 4), Rat(0), Rat(0)};
    SetDesc horiz_trace = trace_desc(ht);
    horiz_trace.parts.push_back(SinglePoint{point(1, 1, 3, 4)});
    add("horizontal-trace-with-limit", horiz_trace);
  }
  // mixtures
  add("segment-plus-point",
      SetDesc{{Segment{Axis::vertical, rat(1, 5), unit_closed()},
               SinglePoint{point(4, 5, 4, 5)}},
              {}});
  add("grid-cross-2x2",
      SetDesc{{Segment{Axis::vertical, rat(1, 4), unit_closed()},
               Segment{Axis::vertical, rat(1, 2), unit_closed()},
               Segment{Axis::horizontal, rat(1, 4), unit_closed()},
               Segment{Axis::horizontal, rat(3, 4), unit_closed()}},
              {}});
  add("box-plus-segment",
      SetDesc{{Box{Interval{Rat(0), rat(1, 2), true, true},
                   Interval{Rat(0), rat(1, 2), true, true}},
               Segment{Axis::horizontal, rat(3, 4), unit_closed()}},
              {}});
  // deletions
  SetDesc seg_minus_interior =
      vertical_segment(rat(3, 5), closed_interval(Rat(0), Rat(1)));
  seg_minus_interior.deletions.push_back(point(3, 5, 1, 2));
  add("segment-minus-interior-point", seg_minus_interior);
  SetDesc seg_minus_endpoint =
      vertical_segment(rat(3, 5), closed_interval(Rat(0), Rat(1)));
  seg_minus_endpoint.deletions.push_back(point(3, 5, 0, 1));
  add("segment-minus-endpoint", seg_minus_endpoint);
  SetDesc points_minus_one =
      points_desc({point(1, 9, 1, 9), point(2, 9, 5, 9), point(4, 9, 8, 9)});
  points_minus_one.deletions.push_back(point(2, 9, 5, 9));
  add("points-minus-one", points_minus_one);
  SetDesc cross_minus_center = cross_desc(point(1, 2, 1, 2));
  cross_minus_center.deletions.push_back(point(1, 2, 1, 2));
  add("cross-minus-center", cross_minus_center);
  SetDesc trace_plus_segment = trace_desc(vertical_tail);
  trace_plus_segment.parts.push_back(
      Segment{Axis::vertical, rat(1, 2), closed_interval(Rat(0), rat(1, 8))});
  add("trace-plus-covering-segment", trace_plus_segment);
  add("split-row",
      SetDesc{{Segment{Axis::horizontal, rat(1, 6),
                       closed_interval(Rat(0), rat(1, 4))},
               Segment{Axis::horizontal, rat(1, 6),
                       closed_interval(rat(1, 2), Rat(1))}},
              {}});
  return entries;
}

SuiteReport suite_prop4(std::uint64_t seed) {
  SuiteReport report{"prop4", seed, {}};
  const auto catalog = prop4_catalog();
  add_check(report, "catalog-size", catalog.size() >= 30,
            std::to_string(catalog.size()) + " entries");
  int agreements = 0, replays = 0, minimality = 0, positives = 0;
  std::string first_disagreement;
  for (const auto& [name, desc] : catalog) {
    const bool oracle_verdict =
        oracle_closed(desc) && oracle_coverable(desc, 8);
    const auto result = is_gamma_compact(desc);
    const auto* cert = std::get_if<GammaCompactCert>(&result);
    const bool impl_verdict = cert != nullptr;
    if (impl_verdict == oracle_verdict) {
      ++agreements;
    } else if (first_disagreement.empty()) {
      first_disagreement = name;
    }
    if (cert) {
      ++positives;
      bool replay_ok = cross_cover_includes(desc, cert->cross_cover);
      bool minimal_ok = true;
      for (std::size_t drop = 0; drop < cert->cross_cover.size(); ++drop) {
        std::vector<Point> reduced = cert->cross_cover;
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(drop));
        if (cross_cover_includes(desc, reduced)) minimal_ok = false;
        const auto off =
            point_off_reduced_cross(desc, cert->cross_cover, drop);
        if (!off || !contains(desc, *off) ||
            cross_of_finite(reduced).contains(*off)) {
          minimal_ok = false;
        }
      }
      if (replay_ok) ++replays;
      if (minimal_ok) ++minimality;
    }
  }
  add_check(report, "verdicts-match-oracle",
            agreements == static_cast<int>(catalog.size()),
            first_disagreement.empty()
                ? std::to_string(agreements) + "/" +
                      std::to_string(catalog.size())
                : "first disagreement: " + first_disagreement);
  add_check(report, "certificate-replay", replays == positives,
            std::to_string(replays) + "/" + std::to_string(positives) +
                " positive verdicts replayed");
  add_check(report, "certificate-minimality", minimality == positives,
            std::to_string(minimality) + "/" + std::to_string(positives));
  return report;
}

// -----------------------------------------------------------------------
// prop41: gamma limits re-verified from the definition
// -----------------------------------------------------------------------

SeqSpec random_mixed_seq(Rng& rng) {
  auto mk = [&](bool constant) {
    if (constant) return CoordFormula{random_rat(rng, 12), Rat(0), Rat(0)};
    return random_injective_formula(rng);
  };
  while (true) {
    SeqSpec seq;
    seq.tail_x = mk(below(rng, 2) == 0);
    seq.tail_y = mk(below(rng, 2) == 0);
    const int prefix = static_cast<int>(below(rng, 4));
    for (int i = 0; i < prefix; ++i) {
      seq.prefix.push_back(Point{random_rat(rng), random_rat(rng)});
    }
    try {
      validate_seq(seq, "gen");
      return seq;
    } catch (const ValidationError&) {
      continue;
    }
  }
}

// Definition-level re-check of a gamma_limit verdict, independent of the
// decision path inside gamma_limit.
bool reverify_gamma_limit(const SeqSpec& seq, const GammaLimitResult& r) {
  if (r.converges) {
    const Point& z0 = r.converges->limit;
    if (seq.tail_x.limit() != z0.x || seq.tail_y.limit() != z0.y) {
      return false;
    }
    const bool pinned_x = seq.tail_x.constant() && seq.tail_x.c == z0.x;
    const bool pinned_y = seq.tail_y.constant() && seq.tail_y.c == z0.y;
    if (!pinned_x && !pinned_y) return false;
    const std::int64_t m = r.converges->tail_index;
    for (std::int64_t n = m; n <= seq.prefix_len(); ++n) {
      if (!on_cross(seq.at(n), z0)) return false;
    }
    if (m > 1 && on_cross(seq.at(m - 1), z0)) return false;
    return true;
  }
  if (seq.tail_x.constant() || seq.tail_y.constant()) return false;
  const Point z = seq.tail_limit();
  int on = 0;
  for (std::int64_t n = seq.prefix_len() + 1; n <= seq.prefix_len() + 50;
       ++n) {
    if (on_cross(seq.at(n), z)) ++on;
  }
  return on <= 2;
}

SuiteReport suite_prop41(std::uint64_t seed) {
  SuiteReport report{"prop41", seed, {}};
  Rng rng(seed);
  const int total = 100;
  int agreed = 0;
  for (int i = 0; i < total; ++i) {
    const SeqSpec seq = random_mixed_seq(rng);
    if (reverify_gamma_limit(seq, gamma_limit(seq))) ++agreed;
  }
  add_check(report, "verdicts-reverified", agreed == total,
            std::to_string(agreed) + "/" + std::to_string(total));
  return report;
}

// -----------------------------------------------------------------------
// prop3: coincidence neighborhoods
// -----------------------------------------------------------------------

SuiteReport suite_prop3(std::uint64_t seed) {
  SuiteReport report{"prop3", seed, {}};
  Rng rng(seed);
  const int total = 50;
  int verified = 0;
  for (int i = 0; i < total; ++i) {
    std::vector<Rat> A, B;
    const int na = static_cast<int>(below(rng, 4)) + 1;
    const int nb = static_cast<int>(below(rng, 4)) + 1;
    for (int k = 0; k < na; ++k) insert_sorted_unique(A, random_rat(rng, 20));
    for (int k = 0; k < nb; ++k) insert_sorted_unique(B, random_rat(rng, 20));
    Point p;
    if (below(rng, 2) == 0) {
      p = Point{A[below(rng, A.size())], random_rat(rng, 20)};
    } else {
      p = Point{random_rat(rng, 20), B[below(rng, B.size())]};
    }
    const Coincidence c = local_coincidence_neighborhood(A, B, p);
    auto inside = [](const Interval& iv, const Rat& v) {
      return v > iv.lo && v < iv.hi;
    };
    std::vector<Rat> au, bv;
    for (const Rat& a : A) {
      if (inside(c.u, a)) au.push_back(a);
    }
    for (const Rat& b : B) {
      if (inside(c.v, b)) bv.push_back(b);
    }
    bool ok = inside(c.u, p.x) && inside(c.v, p.y);
    ok = ok && au.size() <= 1 && bv.size() <= 1;
    const bool cx_in = inside(c.u, c.c.x);
    const bool cy_in = inside(c.v, c.c.y);
    ok = ok && ((au.empty() && !cx_in) ||
                (au.size() == 1 && cx_in && au[0] == c.c.x));
    ok = ok && ((bv.empty() && !cy_in) ||
                (bv.size() == 1 && cy_in && bv[0] == c.c.y));
    const Rat us[3] = {midpoint(std::max(c.u.lo, Rat(0)), p.x), p.x,
                       midpoint(p.x, std::min(c.u.hi, Rat(1)))};
    const Rat vs[3] = {midpoint(std::max(c.v.lo, Rat(0)), p.y), p.y,
                       midpoint(p.y, std::min(c.v.hi, Rat(1)))};
    for (const Rat& ux : us) {
      for (const Rat& vy : vs) {
        const Point q{ux, vy};
        const bool in_cross_ab =
            sorted_contains(A, q.x) || sorted_contains(B, q.y);
        if (in_cross_ab != on_cross(q, c.c)) ok = false;
      }
    }
    if (ok) ++verified;
  }
  add_check(report, "neighborhoods-verified", verified == total,
            std::to_string(verified) + "/" + std::to_string(total));
  return report;
}

// -----------------------------------------------------------------------
// cor32: puncture connectivity at raster scale
// -----------------------------------------------------------------------

SuiteReport suite_cor32(std::uint64_t seed) {
  SuiteReport report{"cor32", seed, {}};
  const std::vector<Point> pool{point(1, 3, 1, 2), point(2, 7, 3, 5),
                                point(9, 11, 4, 9), point(5, 13, 8, 13),
                                point(3, 5, 5, 7)};
  int ok = 0, cases = 0;
  for (int k : {1, 2, 3, 5}) {
    const std::vector<Point> punctures(pool.begin(), pool.begin() + k);
    for (int n : {16, 32, 64, 128}) {
      ++cases;
      if (c1_component_count(square_desc(), punctures, n) == 1) ++ok;
    }
  }
  add_check(report, "square-minus-punctures-connected", ok == cases,
            std::to_string(ok) + "/" + std::to_string(cases));
  // control: a center-aligned segment splits at its punctured midpoint
  // (the exact level 1/2 is invisible to even resolutions under center
  // sampling, so the control pins the aligned level 65/128)
  const SetDesc segment = horizontal_segment(rat(65, 128), unit_closed());
  const int segments = c1_component_count(segment, {point(1, 2, 65, 128)}, 64);
  add_check(report, "segment-control-splits", segments == 2,
            "components = " + std::to_string(segments));
  return report;
}

// -----------------------------------------------------------------------
// lemma2: exhaustive enumeration and the collapse dichotomy
// -----------------------------------------------------------------------

struct Lemma2Instance {
  std::string name;
  int n;
  std::vector<Rat> A, B;
  std::uint64_t golden_count;
};

std::vector<Lemma2Instance> lemma2_instances() {
  return {
      {"n2-empty", 2, {}, {}, 0},
      {"n2-col-only", 2, {rat(1, 2)}, {}, 1},
      {"n2-row-only", 2, {}, {rat(1, 2)}, 1},
      {"n3-col-only", 3, {rat(1, 2)}, {}, 8},
      {"n3-row-only", 3, {}, {rat(1, 2)}, 8},
      {"n2-center-cross", 2, {rat(1, 2)}, {rat(1, 2)}, 16},
      {"n3-center-cross", 3, {rat(1, 2)}, {rat(1, 2)}, 1168},
      {"n2-two-cols", 2, {rat(1, 4), rat(3, 4)}, {rat(1, 2)}, 256},
      {"n3-two-cols", 3, {rat(1, 4), rat(3, 4)}, {rat(1, 2)}, 2173},
      {"n2-far-levels", 2, {rat(1, 4)}, {rat(3, 4)}, 24},
  };
}

SuiteReport suite_lemma2(std::uint64_t seed) {
  SuiteReport report{"lemma2", seed, {}};
  for (const Lemma2Instance& inst : lemma2_instances()) {
    std::uint64_t dichotomy = 0, hypothesis_violations = 0, collapses = 0,
                  scan_failures = 0;
    std::string example;
    const std::uint64_t count = enumerate_cross_mappings(
        inst.n, inst.A, inst.B, [&](const GridFn& f) {
          const auto r = classify_cross_mapping(f, inst.A, inst.B);
          switch (r.kind) {
            case ClassifyResult::Kind::column_collapse:
              ++collapses;
              for (const Point& q : f.image) {
                if (q.x != r.level) ++scan_failures;
              }
              break;
            case ClassifyResult::Kind::row_collapse:
              ++collapses;
              for (const Point& q : f.image) {
                if (q.y != r.level) ++scan_failures;
              }
              break;
            case ClassifyResult::Kind::violation:
              if (r.violation_kind == "dichotomy") {
                if (dichotomy == 0) example = gridfn_to_json(f).dump();
                ++dichotomy;
              } else {
                ++hypothesis_violations;
              }
              break;
          }
        });
    add_check(report, inst.name + "-golden-count", count == inst.golden_count,
              std::to_string(count) + " vs golden " +
                  std::to_string(inst.golden_count));
    add_check(report, inst.name + "-hypotheses-filtered",
              hypothesis_violations == 0,
              std::to_string(hypothesis_violations));
    add_check(report, inst.name + "-collapses-reverified", scan_failures == 0,
              std::to_string(collapses) + " collapse(s) re-scanned");
    // The stated dichotomy: enumerated mappings never classify as a
    // dichotomy violation. The discrete 1/N continuity bound is too weak
    // for this whenever both level sets are nonempty: a mapping may step
    // between the column and the row near their crossing. The check is
    // kept as stated; failing instances carry the counterexample.
    add_check(report, inst.name + "-dichotomy-never-fires", dichotomy == 0,
              dichotomy == 0
                  ? "no dichotomy violations among " + std::to_string(count)
                  : std::to_string(dichotomy) + " of " +
                        std::to_string(count) +
                        " mappings violate; first: " + example);
  }
  return report;
}

// -----------------------------------------------------------------------
// refute: the identity refutation family
// -----------------------------------------------------------------------

PiecewiseMap full_square_map(PieceTag tag) {
  return PiecewiseMap{{Piece{Rat(0), Rat(1), Rat(0), Rat(1), tag}}};
}

PiecewiseMap checkerboard_map(int scale, const Rat& row_level,
                              const Rat& col_level) {
  PiecewiseMap m;
  for (int i = 0; i < scale; ++i) {
    for (int j = 0; j < scale; ++j) {
      const PieceTag tag = (i + j) % 2 == 0 ? PieceTag{true, row_level}
                                            : PieceTag{false, col_level};
      m.pieces.push_back(Piece{Rat(i) / scale, Rat(i + 1) / scale,
                               Rat(j) / scale, Rat(j + 1) / scale, tag});
    }
  }
  return m;
}

std::vector<std::pair<std::string, CandidateSeq>> refute_family(Rng& rng) {
  std::vector<std::pair<std::string, CandidateSeq>> family;
  const int len = 24;
  for (int i = 0; i < 8; ++i) {  // constant row collapses
    CandidateSeq c;
    const Rat level = random_rat(rng, 10);
    for (int n = 0; n < len; ++n) {
      c.maps.push_back(full_square_map(PieceTag{true, level}));
    }
    family.emplace_back("constant-row-" + std::to_string(i), c);
  }
  for (int i = 0; i < 8; ++i) {  // constant column collapses
    CandidateSeq c;
    const Rat level = random_rat(rng, 10);
    for (int n = 0; n < len; ++n) {
      c.maps.push_back(full_square_map(PieceTag{false, level}));
    }
    family.emplace_back("constant-col-" + std::to_string(i), c);
  }
  for (int i = 0; i < 12; ++i) {  // formula sweeps toward a limit row/column
    CandidateSeq c;
    const bool rows = below(rng, 2) == 0;
    const CoordFormula f = random_injective_formula(rng);
    for (int n = 1; n <= len; ++n) {
      c.maps.push_back(full_square_map(PieceTag{rows, f.value(n)}));
    }
    family.emplace_back(
        (rows ? "sweep-rows-" : "sweep-cols-") + std::to_string(i), c);
  }
  for (int i = 0; i < 12; ++i) {  // temporal alternators
    CandidateSeq c;
    const Rat l1 = random_rat(rng, 8), l2 = random_rat(rng, 8);
    const bool mixed = below(rng, 2) == 0;
    for (int n = 0; n < len; ++n) {
      if (mixed) {
        c.maps.push_back(full_square_map(
            n % 2 == 0 ? PieceTag{true, l1} : PieceTag{false, l2}));
      } else {
        c.maps.push_back(
            full_square_map(PieceTag{true, n % 2 == 0 ? l1 : l2}));
      }
    }
    family.emplace_back("alternator-" + std::to_string(i), c);
  }
  for (int i = 0; i < 12; ++i) {  // spatial checkerboards, refining then fixed
    CandidateSeq c;
    const Rat rl = random_rat(rng, 8), cl = random_rat(rng, 8);
    for (int n = 1; n <= len; ++n) {
      c.maps.push_back(checkerboard_map(std::min(n, 4), rl, cl));
    }
    family.emplace_back("checkerboard-" + std::to_string(i), c);
  }
  return family;
}

SuiteReport suite_refute(std::uint64_t seed) {
  SuiteReport report{"refute", seed, {}};
  Rng rng(seed);
  const auto family = refute_family(rng);
  add_check(report, "family-size", family.size() >= 50,
            std::to_string(family.size()) + " candidates");
  int witnessed = 0, replayed = 0, insufficient = 0;
  std::string first_failure;
  for (const auto& [name, candidate] : family) {
    try {
      const RefuteWitness w = refute_pointwise_identity(candidate);
      ++witnessed;
      const WitnessReplay replay = replay_refutation(w);
      const bool via_gamma_limit =
          replay.method == "seqspec-fit+gamma-limit" ||
          replay.method == "parity-split+gamma-limit";
      if (replay.confirmed && via_gamma_limit) {
        ++replayed;
      } else if (first_failure.empty()) {
        first_failure = name + " (" + replay.method + ")";
      }
    } catch (const InsufficientEvidence&) {
      ++insufficient;
      if (first_failure.empty()) first_failure = name + " (insufficient)";
    }
  }
  const int total = static_cast<int>(family.size());
  add_check(report, "witness-for-every-candidate", witnessed == total,
            std::to_string(witnessed) + "/" + std::to_string(total));
  add_check(report, "zero-insufficient-evidence", insufficient == 0,
            std::to_string(insufficient));
  add_check(report, "witnesses-replay-through-gamma-limit", replayed == total,
            first_failure.empty()
                ? std::to_string(replayed) + "/" + std::to_string(total)
                : "first failure: " + first_failure);
  return report;
}

// -----------------------------------------------------------------------
// sec5: approximation over the ultrametric model
// -----------------------------------------------------------------------

SuiteReport suite_sec5(std::uint64_t seed) {
  SuiteReport report{"sec5", seed, {}};
  Rng rng(seed);
  const int depth = 12;
  const UltraModel m = make_ultra_model(depth);
  std::vector<std::uint32_t> xs = {0u, m.point_count() - 1};
  {
    std::uint32_t alt = 0;
    for (int i = 1; i <= depth; i += 2) alt |= 1u << (depth - i);
    xs.push_back(alt);
    xs.push_back(~alt & (m.point_count() - 1));
  }
  while (xs.size() < 16) {
    xs.push_back(static_cast<std::uint32_t>(below(rng, m.point_count())));
  }
  std::vector<std::pair<std::uint32_t, Rat>> samples;
  for (int j = 0; j < 64; ++j) {
    samples.push_back({xs[static_cast<std::size_t>(j) % xs.size()],
                       Rat(2 * j + 1) / Rat(128)});
  }

  struct OracleCase {
    const char* name;
    bool zero_all;
  };
  const OracleCase cases[] = {
      {"constant-x", true}, {"depth1", true}, {"lipschitz", false}};
  for (const OracleCase& oc : cases) {
    const SepOracle oracle = builtin_oracle(oc.name, depth);
    add_check(report, std::string(oc.name) + "-lipschitz-declaration",
              check_lipschitz_declaration(oracle, m), "sampled");
    const ConvergenceReport conv =
        verify_pointwise_convergence(oracle, m, depth, samples);
    bool zeros = true, bound = true;
    for (const ConvergenceSample& s : conv.samples) {
      for (int n = 1; n <= depth; ++n) {
        const Rat& e = s.errors[static_cast<std::size_t>(n - 1)];
        if (e != Rat(0)) zeros = false;
        if (e > Rat(1) / Rat(BigInt(1) << n)) bound = false;
      }
    }
    if (oc.zero_all) {
      add_check(report, std::string(oc.name) + "-errors-zero", zeros,
                "64 samples x 12 levels");
    }
    add_check(report, std::string(oc.name) + "-dyadic-bound",
              bound && conv.all_lipschitz_ok && conv.final_errors_zero,
              "e_n <= 2^-n at all samples");
  }

  int partitions_ok = 0;
  const int cover_trials = 20;
  for (int t = 0; t < cover_trials; ++t) {
    std::vector<Clopen> cover;
    const int pieces = 3 + static_cast<int>(below(rng, 4));
    for (int i = 0; i < pieces; ++i) {
      std::vector<Cylinder> cyls;
      const int k = 1 + static_cast<int>(below(rng, 3));
      for (int c = 0; c < k; ++c) {
        const int d = static_cast<int>(below(rng, depth + 1));
        cyls.push_back(
            Cylinder{d, static_cast<std::uint32_t>(below(rng, 1u << d))});
      }
      cover.push_back(clopen_from_cylinders(m, cyls));
    }
    cover.push_back(clopen_from_cylinders(m, {Cylinder{1, 0}}));
    cover.push_back(clopen_from_cylinders(m, {Cylinder{1, 1}}));
    const auto parts = disjointify_cover(m, cover);
    bool ok = is_partition(m, parts) && parts.size() == cover.size();
    for (std::size_t i = 0; ok && i < parts.size(); ++i) {
      for (std::uint32_t code = 0; code < m.point_count(); ++code) {
        if (parts[i].mask[code] && !cover[i].mask[code]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++partitions_ok;
  }
  add_check(report, "disjointified-covers-are-partitions",
            partitions_ok == cover_trials,
            std::to_string(partitions_ok) + "/" +
                std::to_string(cover_trials));
  return report;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"prop1", "prop3", "prop4", "prop41",
          "lemma2", "cor32", "sec5",  "refute"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "prop1") return suite_prop1(seed);
  if (name == "prop3") return suite_prop3(seed);
  if (name == "prop4") return suite_prop4(seed);
  if (name == "prop41") return suite_prop41(seed);
  if (name == "lemma2") return suite_lemma2(seed);
  if (name == "cor32") return suite_cor32(seed);
  if (name == "sec5") return suite_sec5(seed);
  if (name == "refute") return suite_refute(seed);
  throw ValidationError("unknown suite '" + name + "'");
}

Json suite_report_to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const SuiteCheck& c : report.checks) {
    checks.push_back(
        Json{{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return Json{{"schema", "crosstopo-report/1"},
              {"subcommand", "suite"},
              {"suite", report.name},
              {"seed", report.seed},
              {"verdict", report.passed() ? "pass" : "fail"},
              {"failed", report.failed_count()},
              {"checks", checks}};
}

}  // namespace crosstopo
