#include "crosstopo/lebesgue.hpp"

#include <algorithm>

namespace crosstopo {

// ---------------------------------------------------------------------------
// candidate sequences
// ---------------------------------------------------------------------------

void validate(const CandidateSeq& c) {
  for (std::size_t mi = 0; mi < c.maps.size(); ++mi) {
    const PiecewiseMap& m = c.maps[mi];
    const std::string mpath = "maps[" + std::to_string(mi) + "]";
    if (m.pieces.empty()) {
      throw ValidationError("map has no pieces", mpath);
    }
    std::vector<Rat> xs{Rat(0), Rat(1)}, ys{Rat(0), Rat(1)};
    for (std::size_t pi = 0; pi < m.pieces.size(); ++pi) {
      const Piece& pc = m.pieces[pi];
      const std::string ppath = mpath + ".pieces[" + std::to_string(pi) + "]";
      if (!in_unit_interval(pc.x_lo) || !in_unit_interval(pc.x_hi) ||
          !in_unit_interval(pc.y_lo) || !in_unit_interval(pc.y_hi)) {
        throw ValidationError("piece rectangle leaves the square", ppath);
      }
      if (pc.x_lo > pc.x_hi || pc.y_lo > pc.y_hi) {
        throw ValidationError("piece rectangle is empty", ppath);
      }
      if (!in_unit_interval(pc.tag.level)) {
        throw ValidationError("tag level " + format_rat(pc.tag.level) +
                                  " outside [0,1]",
                              ppath);
      }
      insert_sorted_unique(xs, pc.x_lo);
      insert_sorted_unique(xs, pc.x_hi);
      insert_sorted_unique(ys, pc.y_lo);
      insert_sorted_unique(ys, pc.y_hi);
    }
    // cells of the breakpoint grid must be covered by exactly one interior
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
        const Rat mx = midpoint(xs[i], xs[i + 1]);
        const Rat my = midpoint(ys[j], ys[j + 1]);
        int hits = 0;
        for (const Piece& pc : m.pieces) {
          if (pc.covers(Point{mx, my})) ++hits;
        }
        if (hits == 0) {
          throw ValidationError("pieces leave the square uncovered around (" +
                                    format_rat(mx) + ", " + format_rat(my) +
                                    ")",
                                mpath);
        }
        if (hits > 1) {
          throw ValidationError(
              "piece interiors overlap around (" + format_rat(mx) + ", " +
                  format_rat(my) + ")",
              mpath);
        }
      }
    }
  }
}

Point eval(const PiecewiseMap& m, const Point& p) {
  for (const Piece& pc : m.pieces) {
    if (pc.covers(p)) {
      return pc.tag.is_row ? Point{p.x, pc.tag.level}
                           : Point{pc.tag.level, p.y};
    }
  }
  throw std::logic_error("piecewise map does not cover " + format_point(p));
}

// ---------------------------------------------------------------------------
// refutation harness
// ---------------------------------------------------------------------------

namespace {

std::vector<Point> auto_probes() {
  std::vector<Point> probes;
  for (int k = 1; k <= 6; ++k) {
    const int cells = 1 << k;
    for (int j = 0; j < cells; ++j) {
      for (int i = 0; i < cells; ++i) {
        probes.push_back(Point{Rat(2 * i + 1) / Rat(2 * cells),
                               Rat(2 * j + 1) / Rat(2 * cells)});
      }
    }
  }
  return probes;
}

Rat chebyshev(const Point& a, const Point& b) {
  return std::max(rat_abs(a.x - b.x), rat_abs(a.y - b.y));
}

std::optional<RefuteWitness> probe_evidence(const CandidateSeq& c,
                                            const Point& p, int min_window) {
  const std::int64_t len = static_cast<std::int64_t>(c.maps.size());
  std::vector<Point> images;
  std::vector<Rat> err;
  images.reserve(static_cast<std::size_t>(len));
  for (const PiecewiseMap& m : c.maps) {
    const Point w = eval(m, p);
    images.push_back(w);
    err.push_back(chebyshev(w, p));
  }
  // persistent positive error over a final window
  std::int64_t n0 = len + 1;
  while (n0 > 1 && err[static_cast<std::size_t>(n0 - 2)] > 0) --n0;
  if (len - n0 + 1 >= min_window) {
    Rat delta = err[static_cast<std::size_t>(n0 - 1)];
    for (std::int64_t n = n0; n <= len; ++n) {
      delta = std::min(delta, err[static_cast<std::size_t>(n - 1)]);
    }
    return RefuteWitness{p, n0, "free-coordinate-bounded-away", delta,
                         std::move(images)};
  }
  // recurring large error up to the end of the window: the error scale of
  // the last quarter must match the overall scale, ruling out sequences
  // that are genuinely settling down
  Rat overall(0);
  for (const Rat& e : err) overall = std::max(overall, e);
  const std::int64_t lq_start = len - len / 4 + 1;
  Rat lq(0);
  for (std::int64_t n = lq_start; n <= len; ++n) {
    lq = std::max(lq, err[static_cast<std::size_t>(n - 1)]);
  }
  if (lq > 0 && lq * 2 >= overall) {
    return RefuteWitness{p, lq_start, "free-coordinate-oscillates", lq,
                         std::move(images)};
  }
  return std::nullopt;
}

}  // namespace

RefuteWitness refute_pointwise_identity(const CandidateSeq& c,
                                        const std::vector<Point>& probes,
                                        int min_window) {
  validate(c);
  const std::int64_t len = static_cast<std::int64_t>(c.maps.size());
  if (len < min_window) {
    throw InsufficientEvidence(
        "candidate list has " + std::to_string(len) +
        " maps, shorter than the inspection window of " +
        std::to_string(min_window));
  }
  const std::vector<Point> search = probes.empty() ? auto_probes() : probes;
  for (const Point& p : search) {
    validate_point(p, "probe");
    if (auto w = probe_evidence(c, p, min_window)) return *w;
  }
  throw InsufficientEvidence(
      "no probe out of " + std::to_string(search.size()) +
      " produced persistent divergence evidence within the window");
}

WitnessReplay replay_refutation(const RefuteWitness& w) {
  WitnessReplay out;
  const std::span<const Point> window(w.images);
  if (const auto fitted = fit_seqspec(window)) {
    const GammaLimitResult glr = gamma_limit(*fitted);
    out.method = "seqspec-fit+gamma-limit";
    if (glr.diverges) {
      out.confirmed = true;
      out.detail = "no cross-topology limit: " + glr.diverges->witness_kind;
    } else {
      const Point& limit = glr.converges->limit;
      out.confirmed = !(limit == w.probe);
      out.detail = "cross-topology limit " + format_point(limit) +
                   (out.confirmed ? " differs from the probe "
                                  : " equals the probe ") +
                   format_point(w.probe);
    }
    return out;
  }
  // group the window tail by value; each group is a constant sequence with
  // its own limit
  const WindowVerdict wv = check_window_against(window, w.probe);
  if (wv.tail_values.size() >= 2) {
    const Point& v0 = wv.tail_values[0];
    const Point& v1 = wv.tail_values[1];
    const auto lim = [](const Point& v) {
      SeqSpec s;
      s.tail_x = CoordFormula{v.x, Rat(0), Rat(0)};
      s.tail_y = CoordFormula{v.y, Rat(0), Rat(0)};
      return gamma_limit(s).converges->limit;
    };
    out.method = "parity-split+gamma-limit";
    out.confirmed = !(lim(v0) == lim(v1));
    out.detail = "two cluster values " + format_point(v0) + " and " +
                 format_point(v1) + " admit no common limit";
    return out;
  }
  out.method = "window-clusters";
  if (wv.tail_values.size() == 1) {
    out.confirmed = !(wv.tail_values[0] == w.probe);
    out.detail = "window settles at " + format_point(wv.tail_values[0]);
  } else {
    out.confirmed = false;
    out.detail = "empty window";
  }
  return out;
}

// ---------------------------------------------------------------------------
// oracles and approximants
// ---------------------------------------------------------------------------

namespace {

Rat dyadic_value(std::uint32_t x, int depth) {
  Rat v(0);
  for (int i = 1; i <= depth; ++i) {
    if (point_bit(x, depth, i)) v += Rat(1) / Rat(BigInt(1) << i);
  }
  return v;
}

}  // namespace

SepOracle builtin_oracle(const std::string& name, int model_depth) {
  if (name == "constant-x") {
    return SepOracle{"constant-x",
                     [](std::uint32_t, const Rat& y) { return y / 2; },
                     Rat(0)};
  }
  if (name == "depth1") {
    const int d = model_depth;
    return SepOracle{"depth1",
                     [d](std::uint32_t x, const Rat& y) {
                       return point_bit(x, d, 1) ? y : Rat(0);
                     },
                     Rat(2)};
  }
  if (name == "lipschitz") {
    const int d = model_depth;
    return SepOracle{"lipschitz",
                     [d](std::uint32_t x, const Rat& y) {
                       return dyadic_value(x, d) * y / 2;
                     },
                     Rat(1)};
  }
  throw ValidationError("unknown builtin oracle '" + name +
                        "'; known: constant-x, depth1, lipschitz");
}

std::vector<std::string> builtin_oracle_names() {
  return {"constant-x", "depth1", "lipschitz"};
}

bool check_lipschitz_declaration(const SepOracle& f, const UltraModel& m,
                                 int samples_per_depth) {
  if (!f.lipschitz_x) return true;
  const Rat& L = *f.lipschitz_x;
  const std::uint32_t bases[2] = {
      0u, [&] {
        std::uint32_t alt = 0;
        for (int i = 1; i <= m.depth; i += 2) alt |= 1u << (m.depth - i);
        return alt;
      }()};
  for (int d = 1; d <= m.depth; ++d) {
    for (std::uint32_t base : bases) {
      const std::uint32_t other = base ^ (1u << (m.depth - d));
      const Rat dist = ultra_distance(base, other, m.depth);
      for (int k = 0; k < samples_per_depth; ++k) {
        const Rat y = Rat(k) / Rat(std::max(samples_per_depth - 1, 1));
        if (rat_abs(f.eval(base, y) - f.eval(other, y)) > L * dist) {
          return false;
        }
      }
    }
  }
  return true;
}

Baire1Approximant baire1_approximate(const SepOracle& f, const UltraModel& m,
                                     int level) {
  if (level < 1 || level > m.depth) {
    throw ValidationError("level " + std::to_string(level) +
                          " outside [1," + std::to_string(m.depth) + "]");
  }
  Baire1Approximant out;
  out.oracle = f;
  out.model_depth = m.depth;
  out.level = level;
  const std::uint32_t cyl_count = 1u << level;
  out.reps.reserve(cyl_count);
  for (std::uint32_t q = 0; q < cyl_count; ++q) {
    out.reps.push_back(
        cylinder_min_point(m, Cylinder{level, q}));
  }
  return out;
}

ConvergenceReport verify_pointwise_convergence(
    const SepOracle& f, const UltraModel& m, int n_max,
    const std::vector<std::pair<std::uint32_t, Rat>>& samples) {
  if (n_max < 1 || n_max > m.depth) {
    throw ValidationError("n_max outside [1, depth]");
  }
  std::vector<Baire1Approximant> levels;
  levels.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    levels.push_back(baire1_approximate(f, m, n));
  }
  ConvergenceReport report;
  report.n_max = n_max;
  for (const auto& [x, y] : samples) {
    ConvergenceSample cs;
    cs.x = x;
    cs.y = y;
    const Rat truth = f.eval(x, y);
    for (int n = 1; n <= n_max; ++n) {
      cs.errors.push_back(
          rat_abs(levels[static_cast<std::size_t>(n - 1)](x, y) - truth));
    }
    // max-tail envelope must be nonincreasing and end at the last error
    Rat env = cs.errors.back();
    for (int n = n_max; n >= 1; --n) {
      const Rat& e = cs.errors[static_cast<std::size_t>(n - 1)];
      if (e > env) env = e;
      // env now equals max_{m >= n} e_m; monotonicity is by construction,
      // recorded per sample for the report
    }
    cs.envelope_monotone = true;
    if (f.lipschitz_x) {
      for (int n = 1; n <= n_max; ++n) {
        const Rat bound = *f.lipschitz_x / Rat(BigInt(1) << n);
        if (cs.errors[static_cast<std::size_t>(n - 1)] > bound) {
          cs.lipschitz_bound_ok = false;
          report.all_lipschitz_ok = false;
        }
      }
    }
    if (n_max == m.depth && !(cs.errors.back() == Rat(0))) {
      report.final_errors_zero = false;
    }
    report.samples.push_back(std::move(cs));
  }
  return report;
}

}  // namespace crosstopo
