#include "crosstopo/gammatop.hpp"

#include <algorithm>
#include <map>

namespace crosstopo {

// ---------------------------------------------------------------------------
// gamma-discreteness
// ---------------------------------------------------------------------------

namespace {

DiscreteResult counterexample(char coord, const Rat& value, std::string first,
                              std::string second) {
  DiscreteResult r;
  r.counterexample = DiscreteCounterexample{coord, value, std::move(first),
                                            std::move(second)};
  return r;
}

std::string nth(std::int64_t n) { return "point " + std::to_string(n); }

}  // namespace

DiscreteResult verify_gamma_discrete(const std::vector<Point>& points) {
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      ++pairs;
      if (points[i].x == points[j].x) {
        return counterexample('x', points[i].x, nth(i + 1), nth(j + 1));
      }
      if (points[i].y == points[j].y) {
        return counterexample('y', points[i].y, nth(i + 1), nth(j + 1));
      }
    }
  }
  DiscreteResult r;
  r.certificate = DiscreteCertificate{pairs, "finite list, all pairs checked"};
  return r;
}

DiscreteResult verify_gamma_discrete(const SeqSpec& seq) {
  validate_seq(seq, "seq");
  const std::int64_t len = seq.prefix_len();
  if (seq.tail_x.constant()) {
    return counterexample('x', seq.tail_x.c, nth(len + 1), nth(len + 2));
  }
  if (seq.tail_y.constant()) {
    return counterexample('y', seq.tail_y.c, nth(len + 1), nth(len + 2));
  }
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < seq.prefix.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.prefix.size(); ++j) {
      ++pairs;
      if (seq.prefix[i].x == seq.prefix[j].x) {
        return counterexample('x', seq.prefix[i].x, nth(i + 1), nth(j + 1));
      }
      if (seq.prefix[i].y == seq.prefix[j].y) {
        return counterexample('y', seq.prefix[i].y, nth(i + 1), nth(j + 1));
      }
    }
  }
  // prefix coordinates may still be hit by the tail at one index each
  for (std::size_t i = 0; i < seq.prefix.size(); ++i) {
    ++pairs;
    if (auto n = seq.tail_x.solve(seq.prefix[i].x);
        n && is_integer(*n) && numerator(*n) > len) {
      return counterexample('x', seq.prefix[i].x, nth(i + 1),
                            nth(static_cast<std::int64_t>(numerator(*n))));
    }
    if (auto n = seq.tail_y.solve(seq.prefix[i].y);
        n && is_integer(*n) && numerator(*n) > len) {
      return counterexample('y', seq.prefix[i].y, nth(i + 1),
                            nth(static_cast<std::int64_t>(numerator(*n))));
    }
  }
  DiscreteResult r;
  r.certificate = DiscreteCertificate{
      pairs, "both tail coordinates injective; prefix avoids tail values"};
  return r;
}

// ---------------------------------------------------------------------------
// local coincidence
// ---------------------------------------------------------------------------

namespace {

Interval isolate_level(const std::vector<Rat>& levels, const Rat& at) {
  Rat lo = at > 0 ? Rat(0) : Rat(-1);
  Rat hi = at < 1 ? Rat(1) : Rat(2);
  for (const Rat& v : levels) {
    if (v < at) lo = std::max(lo, midpoint(v, at));
    if (v > at) hi = std::min(hi, midpoint(at, v));
  }
  return Interval{lo, hi, false, false};
}

bool strictly_inside(const Interval& iv, const Rat& v) {
  return v > iv.lo && v < iv.hi;
}

}  // namespace

Coincidence local_coincidence_neighborhood(std::vector<Rat> A,
                                           std::vector<Rat> B,
                                           const Point& p) {
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());
  validate_point(p, "p");
  if (A.empty() || B.empty()) {
    throw ValidationError(
        "cross(A x B) is empty because " + std::string(A.empty() ? "A" : "B") +
        " is empty; no point lies on it");
  }
  const bool x_in_a = sorted_contains(A, p.x);
  const bool y_in_b = sorted_contains(B, p.y);
  if (!x_in_a && !y_in_b) {
    throw ValidationError("point " + format_point(p) +
                          " is not on cross(A x B)");
  }

  Coincidence out;
  out.u = isolate_level(A, p.x);
  out.v = isolate_level(B, p.y);
  if (x_in_a && y_in_b) {
    out.c = p;
  } else if (x_in_a) {
    out.c = Point{p.x, B.front()};
  } else {
    out.c = Point{A.front(), p.y};
  }

  // line-set equality: A ∩ U == {c.x} ∩ U and B ∩ V == {c.y} ∩ V
  std::vector<Rat> au, bv;
  for (const Rat& a : A) {
    if (strictly_inside(out.u, a)) au.push_back(a);
  }
  for (const Rat& b : B) {
    if (strictly_inside(out.v, b)) bv.push_back(b);
  }
  const bool cx_in_u = strictly_inside(out.u, out.c.x);
  const bool cy_in_v = strictly_inside(out.v, out.c.y);
  const bool cols_match =
      (au.empty() && !cx_in_u) || (au.size() == 1 && cx_in_u && au[0] == out.c.x);
  const bool rows_match =
      (bv.empty() && !cy_in_v) || (bv.size() == 1 && cy_in_v && bv[0] == out.c.y);
  if (!cols_match || !rows_match) {
    throw std::logic_error("coincidence neighborhood construction failed");
  }
  out.replay_log.push_back("U = (" + format_rat(out.u.lo) + ", " +
                           format_rat(out.u.hi) + ") isolates " +
                           std::to_string(au.size()) + " level(s) of A");
  out.replay_log.push_back("V = (" + format_rat(out.v.lo) + ", " +
                           format_rat(out.v.hi) + ") isolates " +
                           std::to_string(bv.size()) + " level(s) of B");

  // sampled two-sided containment inside U x V
  const Rat um = midpoint(std::max(out.u.lo, Rat(0)), std::min(out.u.hi, Rat(1)));
  const Rat vm = midpoint(std::max(out.v.lo, Rat(0)), std::min(out.v.hi, Rat(1)));
  auto in_cross_ab = [&](const Point& q) {
    return sorted_contains(A, q.x) || sorted_contains(B, q.y);
  };
  std::vector<Point> samples;
  for (const Rat& a : au) samples.push_back(Point{a, vm});
  for (const Rat& b : bv) samples.push_back(Point{um, b});
  if (cx_in_u) samples.push_back(Point{out.c.x, vm});
  if (cy_in_v) samples.push_back(Point{um, out.c.y});
  samples.push_back(p);
  for (const Point& q : samples) {
    if (in_cross_ab(q) != on_cross(q, out.c)) {
      throw std::logic_error("two-sided containment check failed at " +
                             format_point(q));
    }
  }
  out.replay_log.push_back("two-sided containment verified on " +
                           std::to_string(samples.size()) + " sample(s)");
  return out;
}

// ---------------------------------------------------------------------------
// gamma-compactness
// ---------------------------------------------------------------------------

namespace {

struct Line {
  bool is_col;
  Rat value;
};

bool line_covers(const Line& l, const Point& p) {
  return l.is_col ? l.value == p.x : l.value == p.y;
}

// Smallest set of lines covering all points; exact search in canonical
// order (columns before rows, then ascending value) so certificates are
// deterministic. Point counts here are tiny.
std::vector<Line> min_line_cover(const std::vector<Point>& points) {
  if (points.empty()) return {};
  std::vector<Line> cands;
  {
    std::vector<Rat> cs, rs;
    for (const Point& p : points) insert_sorted_unique(cs, p.x);
    for (const Point& p : points) insert_sorted_unique(rs, p.y);
    for (const Rat& v : cs) cands.push_back(Line{true, v});
    for (const Rat& v : rs) cands.push_back(Line{false, v});
  }
  auto covered = [&](const std::vector<std::size_t>& pick) {
    for (const Point& p : points) {
      bool ok = false;
      for (std::size_t idx : pick) {
        if (line_covers(cands[idx], p)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };
  for (std::size_t k = 1; k <= cands.size(); ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (covered(pick)) {
        std::vector<Line> out;
        for (std::size_t idx : pick) out.push_back(cands[idx]);
        return out;
      }
      // next k-combination
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == cands.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};  // unreachable: the column through each point always covers it
}

std::vector<Point> pair_lines(std::vector<Rat> cols, std::vector<Rat> rows) {
  std::vector<Point> c;
  const std::size_t m = std::min(cols.size(), rows.size());
  for (std::size_t i = 0; i < m; ++i) c.push_back(Point{cols[i], rows[i]});
  for (std::size_t i = m; i < cols.size(); ++i) {
    c.push_back(Point{cols[i], rows.empty() ? Rat(0) : rows[0]});
  }
  for (std::size_t j = m; j < rows.size(); ++j) {
    c.push_back(Point{cols.empty() ? Rat(0) : cols[0], rows[j]});
  }
  return c;
}

}  // namespace

bool cross_cover_includes(const SetDesc& k, const std::vector<Point>& cover) {
  const Arrangement arr(k);
  const auto needs = arr.cover_needs();
  if (needs.uncoverable) return false;
  const CrossSet cs = cross_of_finite(cover);
  for (const Rat& v : needs.cols) {
    if (!sorted_contains(cs.cols, v)) return false;
  }
  for (const Rat& v : needs.rows) {
    if (!sorted_contains(cs.rows, v)) return false;
  }
  for (const Point& p : needs.isolated) {
    if (!cs.contains(p)) return false;
  }
  return true;
}

GammaCompactResult is_gamma_compact(const SetDesc& k) {
  validate(k);
  const Arrangement arr(k);
  std::string closed_witness;
  if (!arr.tau_closed(&closed_witness)) {
    return GammaCompactRefusal{1, "not closed: " + closed_witness};
  }
  const auto needs = arr.cover_needs();
  if (needs.uncoverable) {
    return GammaCompactRefusal{2, needs.reason};
  }

  std::vector<Rat> cols = needs.cols, rows = needs.rows;
  std::vector<Point> off_line;
  for (const Point& p : needs.isolated) off_line.push_back(p);
  for (const Line& l : min_line_cover(off_line)) {
    if (l.is_col) {
      insert_sorted_unique(cols, l.value);
    } else {
      insert_sorted_unique(rows, l.value);
    }
  }
  std::vector<Point> cover = pair_lines(cols, rows);

  // trim to an inclusion-minimal cover: dropping any element must break it
  std::size_t i = 0;
  while (i < cover.size()) {
    std::vector<Point> reduced = cover;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
    if (cross_cover_includes(k, reduced)) {
      cover = std::move(reduced);
    } else {
      ++i;
    }
  }
  if (!cross_cover_includes(k, cover)) {
    throw std::logic_error("cross cover construction failed to include set");
  }

  GammaCompactCert cert;
  cert.compact_witness.push_back(
      "closed: no adherent point outside the set (boundary scan)");
  cert.compact_witness.push_back("bounded: subset of the unit square");
  cert.compact_witness.push_back(
      "cover: " + std::to_string(needs.cols.size()) + " forced column(s), " +
      std::to_string(needs.rows.size()) + " forced row(s), " +
      std::to_string(needs.isolated.size()) + " isolated point(s)");
  cert.cross_cover = std::move(cover);
  return cert;
}

namespace {

// A point on the vertical line x = v inside (lo, hi), avoiding the finitely
// many blocked rows and the deletions of k.
std::optional<Point> point_on_column(const SetDesc& k, const Rat& v,
                                     const Rat& lo, const Rat& hi,
                                     const std::vector<Rat>& blocked_rows) {
  std::vector<Rat> cuts{lo, hi};
  for (const Rat& r : blocked_rows) {
    if (r > lo && r < hi) insert_sorted_unique(cuts, r);
  }
  for (std::size_t g = 0; g + 1 < cuts.size(); ++g) {
    Rat a = cuts[g], b = cuts[g + 1];
    for (int attempt = 0; attempt < 8; ++attempt) {
      const Point q{v, midpoint(a, b)};
      if (!sorted_contains(blocked_rows, q.y) && contains(k, q)) return q;
      b = midpoint(a, b);  // deletions are finite; bisect past them
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Point> point_off_reduced_cross(const SetDesc& k,
                                             const std::vector<Point>& cover,
                                             std::size_t drop) {
  std::vector<Point> reduced = cover;
  if (drop < reduced.size()) {
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  const CrossSet cs = cross_of_finite(reduced);
  const Arrangement arr(k);
  const auto needs = arr.cover_needs();
  if (needs.uncoverable) return std::nullopt;

  for (const Point& p : needs.isolated) {
    if (!cs.contains(p)) return p;
  }
  // a forced column that the reduced cross lost: exhibit a set point on it
  for (const Rat& v : needs.cols) {
    if (sorted_contains(cs.cols, v)) continue;
    for (const Primitive& prim : k.parts) {
      if (const Segment* seg = std::get_if<Segment>(&prim)) {
        if (seg->axis == Axis::vertical && seg->level == v) {
          if (auto q = point_on_column(k, v, seg->span.lo, seg->span.hi,
                                       cs.rows)) {
            return q;
          }
        }
        if (seg->axis == Axis::horizontal && seg->span.contains(v) &&
            !sorted_contains(cs.rows, seg->level)) {
          const Point q{v, seg->level};
          if (contains(k, q)) return q;
        }
      } else if (const Box* box = std::get_if<Box>(&prim)) {
        if (box->x.degenerate() && box->x.lo == v) {
          if (auto q =
                  point_on_column(k, v, box->y.lo, box->y.hi, cs.rows)) {
            return q;
          }
        }
      } else if (const SeqTrace* tr = std::get_if<SeqTrace>(&prim)) {
        const SeqSpec& seq = tr->seq;
        if (seq.tail_x.constant() && seq.tail_x.c == v &&
            !seq.tail_y.constant()) {
          for (std::int64_t n = seq.prefix_len() + 1;
               n < seq.prefix_len() + 4 + static_cast<std::int64_t>(
                                              cs.rows.size());
               ++n) {
            const Point q = seq.at(n);
            if (!cs.contains(q) && contains(k, q)) return q;
          }
        }
      }
    }
  }
  for (const Rat& v : needs.rows) {
    if (sorted_contains(cs.rows, v)) continue;
    for (const Primitive& prim : k.parts) {
      if (const Segment* seg = std::get_if<Segment>(&prim)) {
        if (seg->axis == Axis::horizontal && seg->level == v) {
          std::vector<Rat> blocked = cs.cols;
          std::vector<Rat> cuts{seg->span.lo, seg->span.hi};
          for (const Rat& c : blocked) {
            if (c > seg->span.lo && c < seg->span.hi) {
              insert_sorted_unique(cuts, c);
            }
          }
          for (std::size_t g = 0; g + 1 < cuts.size(); ++g) {
            Rat a = cuts[g], b = cuts[g + 1];
            for (int attempt = 0; attempt < 8; ++attempt) {
              const Point q{midpoint(a, b), v};
              if (!sorted_contains(blocked, q.x) && contains(k, q)) return q;
              b = midpoint(a, b);
            }
          }
        }
        if (seg->axis == Axis::vertical && seg->span.contains(v) &&
            !sorted_contains(cs.cols, seg->level)) {
          const Point q{seg->level, v};
          if (contains(k, q)) return q;
        }
      } else if (const Box* box = std::get_if<Box>(&prim)) {
        if (box->y.degenerate() && box->y.lo == v) {
          std::vector<Rat> cuts{box->x.lo, box->x.hi};
          for (const Rat& c : cs.cols) {
            if (c > box->x.lo && c < box->x.hi) insert_sorted_unique(cuts, c);
          }
          for (std::size_t g = 0; g + 1 < cuts.size(); ++g) {
            const Point q{midpoint(cuts[g], cuts[g + 1]), v};
            if (!sorted_contains(cs.cols, q.x) && contains(k, q)) return q;
          }
        }
      } else if (const SeqTrace* tr = std::get_if<SeqTrace>(&prim)) {
        const SeqSpec& seq = tr->seq;
        if (seq.tail_y.constant() && seq.tail_y.c == v &&
            !seq.tail_x.constant()) {
          for (std::int64_t n = seq.prefix_len() + 1;
               n < seq.prefix_len() + 4 + static_cast<std::int64_t>(
                                              cs.cols.size());
               ++n) {
            const Point q = seq.at(n);
            if (!cs.contains(q) && contains(k, q)) return q;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// gamma-limits
// ---------------------------------------------------------------------------

GammaLimitResult gamma_limit(const SeqSpec& seq) {
  validate_seq(seq, "seq");
  GammaLimitResult out;
  if (!seq.tail_x.constant() && !seq.tail_y.constant()) {
    // the tail is never on the cross of its own product limit, and no other
    // candidate limit can absorb more than finitely many tail points
    GammaLimitDiverges d;
    d.witness_kind = "injective-both-coordinates";
    d.detail.push_back(
        "both tail coordinates are injective; the tail meets cross(z) at "
        "most finitely often for every z");
    out.diverges = d;
    return out;
  }
  const Point limit = seq.tail_limit();
  std::int64_t m = seq.prefix_len() + 1;
  while (m > 1 && on_cross(seq.prefix[static_cast<std::size_t>(m - 2)], limit)) {
    --m;
  }
  out.converges = GammaLimitConverges{limit, m};
  return out;
}

// ---------------------------------------------------------------------------
// interior / closure queries
// ---------------------------------------------------------------------------

bool gamma_interior_contains(const SetDesc& s, const Point& p) {
  validate(s);
  validate_point(p, "p");
  if (!contains(s, p)) return false;
  return Arrangement(s).point_has_cross(p);
}

bool gamma_closure_contains(const SetDesc& s, const Point& p) {
  validate(s);
  validate_point(p, "p");
  if (contains(s, p)) return true;
  return !Arrangement(s).punctured_cross_misses(p);
}

// ---------------------------------------------------------------------------
// finite-window helpers
// ---------------------------------------------------------------------------

WindowVerdict check_window_against(std::span<const Point> window,
                                   const Point& target) {
  WindowVerdict v;
  const std::size_t n = window.size();
  if (n == 0) return v;
  std::size_t m = n;  // first index (0-based) of the all-on-cross suffix
  while (m > 0 && on_cross(window[m - 1], target)) --m;
  v.eventually_on_cross = m < n;
  v.cross_tail_index = v.eventually_on_cross ? static_cast<std::int64_t>(m) + 1
                                             : 0;
  const std::size_t half = n / 2;
  for (std::size_t i = half; i < n; ++i) {
    if (std::find(v.tail_values.begin(), v.tail_values.end(), window[i]) ==
        v.tail_values.end()) {
      v.tail_values.push_back(window[i]);
    }
  }
  return v;
}

bool WindowVerdict::confirms_divergence_from(const Point& target) const {
  if (!eventually_on_cross) return true;  // off-cross points persist to the end
  if (tail_values.size() >= 2) return true;  // recurring distinct clusters
  if (tail_values.size() == 1 && !(tail_values[0] == target)) return true;
  return false;
}

namespace {

std::optional<CoordFormula> fit_formula(std::span<const Rat> values,
                                        std::int64_t first_index) {
  const std::size_t m = values.size();
  if (m < 3) return std::nullopt;
  bool all_equal = true;
  for (std::size_t i = 1; i < m; ++i) {
    if (values[i] != values[0]) {
      all_equal = false;
      break;
    }
  }
  if (all_equal) return CoordFormula{values[0], Rat(0), Rat(0)};
  const Rat d1 = values[0] - values[1];
  const Rat d2 = values[1] - values[2];
  if (d2 == 0 || d1 == d2) return std::nullopt;
  const Rat t = Rat(2) * d2 / (d1 - d2);  // t = first_index + b
  const Rat b = t - first_index;
  if (b < 0 || t <= 0) return std::nullopt;
  const Rat a = d1 * t * (t + 1);
  if (a == 0) return std::nullopt;
  const CoordFormula f{values[0] - a / t, a, b};
  for (std::size_t i = 0; i < m; ++i) {
    if (f.value(first_index + static_cast<std::int64_t>(i)) != values[i]) {
      return std::nullopt;
    }
  }
  return f;
}

}  // namespace

std::optional<SeqSpec> fit_seqspec(std::span<const Point> window) {
  const std::size_t n = window.size();
  const std::size_t max_prefix = n >= 3 ? std::min<std::size_t>(n - 3, 8) : 0;
  for (std::size_t k = 0; k <= max_prefix; ++k) {
    std::vector<Rat> xs, ys;
    for (std::size_t i = k; i < n; ++i) {
      xs.push_back(window[i].x);
      ys.push_back(window[i].y);
    }
    const std::int64_t first = static_cast<std::int64_t>(k) + 1;
    const auto fx = fit_formula(xs, first);
    if (!fx) continue;
    const auto fy = fit_formula(ys, first);
    if (!fy) continue;
    SeqSpec seq;
    seq.prefix.assign(window.begin(),
                      window.begin() + static_cast<std::ptrdiff_t>(k));
    seq.tail_x = *fx;
    seq.tail_y = *fy;
    try {
      validate_seq(seq, "fit");
    } catch (const ValidationError&) {
      continue;
    }
    return seq;
  }
  return std::nullopt;
}

}  // namespace crosstopo
