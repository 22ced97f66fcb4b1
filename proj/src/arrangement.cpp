#include "crosstopo/arrangement.hpp"

#include <algorithm>
#include <cassert>

namespace crosstopo {

namespace {

void collect_interval(std::vector<Rat>& axis, const Interval& iv) {
  insert_sorted_unique(axis, iv.lo);
  insert_sorted_unique(axis, iv.hi);
}

}  // namespace

Arrangement::Arrangement(const SetDesc& s) : desc_(&s) {
  xs_ = {Rat(0), Rat(1)};
  ys_ = {Rat(0), Rat(1)};
  for (const Primitive& prim : s.parts) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Box>) {
            collect_interval(xs_, v.x);
            collect_interval(ys_, v.y);
          } else if constexpr (std::is_same_v<T, Segment>) {
            if (v.axis == Axis::vertical) {
              insert_sorted_unique(xs_, v.level);
              collect_interval(ys_, v.span);
            } else {
              insert_sorted_unique(ys_, v.level);
              collect_interval(xs_, v.span);
            }
          } else if constexpr (std::is_same_v<T, SinglePoint>) {
            insert_sorted_unique(xs_, v.p.x);
            insert_sorted_unique(ys_, v.p.y);
          } else {
            for (const Point& p : v.seq.prefix) {
              insert_sorted_unique(xs_, p.x);
              insert_sorted_unique(ys_, p.y);
            }
            insert_sorted_unique(xs_, v.seq.tail_x.limit());
            insert_sorted_unique(ys_, v.seq.tail_y.limit());
          }
        },
        prim);
  }
  for (const Point& d : s.deletions) {
    insert_sorted_unique(xs_, d.x);
    insert_sorted_unique(ys_, d.y);
  }

  // generic membership caches
  const std::size_t nx = xs_.size(), ny = ys_.size();
  cell_box_.assign(ncols() * nrows(), 0);
  for (std::size_t ci = 0; ci < ncols(); ++ci) {
    for (std::size_t cj = 0; cj < nrows(); ++cj) {
      const Point mid{midpoint(xs_[ci], xs_[ci + 1]),
                      midpoint(ys_[cj], ys_[cj + 1])};
      cell_box_[ci + cj * ncols()] = box_member(s, mid) ? 1 : 0;
    }
  }
  vedge_line_.assign(nx * nrows(), 0);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t cj = 0; cj < nrows(); ++cj) {
      const Point mid{xs_[i], midpoint(ys_[cj], ys_[cj + 1])};
      vedge_line_[i + cj * nx] = line_member(s, mid) ? 1 : 0;
    }
  }
  hedge_line_.assign(ncols() * ny, 0);
  for (std::size_t ci = 0; ci < ncols(); ++ci) {
    for (std::size_t j = 0; j < ny; ++j) {
      const Point mid{midpoint(xs_[ci], xs_[ci + 1]), ys_[j]};
      hedge_line_[ci + j * ncols()] = line_member(s, mid) ? 1 : 0;
    }
  }
  vertex_in_.assign(nx * ny, 0);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      vertex_in_[i + j * nx] =
          contains(s, Point{xs_[i], ys_[j]}) ? 1 : 0;
    }
  }

  // trace tail analysis
  for (const Primitive& prim : s.parts) {
    const SeqTrace* tr = std::get_if<SeqTrace>(&prim);
    if (!tr) continue;
    const SeqSpec& seq = tr->seq;
    TraceInfo info;
    info.seq = &seq;
    info.approach_x = seq.tail_x.approach_side();
    info.approach_y = seq.tail_y.approach_side();
    info.limit_xi = locate(xs_, seq.tail_x.limit()).index;
    info.limit_yi = locate(ys_, seq.tail_y.limit()).index;
    const std::int64_t first_tail = seq.prefix_len() + 1;
    std::int64_t stable = first_tail;
    const bool cx = seq.tail_x.constant(), cy = seq.tail_y.constant();
    if (cx && cy) {
      info.kind = TraceKind::constant_point;
    } else {
      if (!cx) {
        // interval adjacent to the limit on the approach side
        const std::size_t li = info.limit_xi;
        info.fx = info.approach_x > 0 ? li : li - 1;
        const Rat bound =
            info.approach_x > 0 ? xs_[li + 1] : xs_[li - 1];
        stable = std::max(stable, seq.tail_x.index_within(bound));
      } else {
        info.fx = info.limit_xi;
      }
      if (!cy) {
        const std::size_t lj = info.limit_yi;
        info.fy = info.approach_y > 0 ? lj : lj - 1;
        const Rat bound =
            info.approach_y > 0 ? ys_[lj + 1] : ys_[lj - 1];
        stable = std::max(stable, seq.tail_y.index_within(bound));
      } else {
        info.fy = info.limit_yi;
      }
      if (cx) {
        info.kind = TraceKind::vertical;
        info.fx = info.limit_xi;
      } else if (cy) {
        info.kind = TraceKind::horizontal;
        info.fy = info.limit_yi;
      } else {
        info.kind = TraceKind::diagonal;
      }
    }
    info.stable_from = stable;
    traces_.push_back(info);
  }
}

bool Arrangement::cell_box(std::size_t ci, std::size_t cj) const {
  return cell_box_[ci + cj * ncols()] != 0;
}
bool Arrangement::vedge_line(std::size_t i, std::size_t cj) const {
  return vedge_line_[i + cj * xs_.size()] != 0;
}
bool Arrangement::hedge_line(std::size_t ci, std::size_t j) const {
  return hedge_line_[ci + j * ncols()] != 0;
}
bool Arrangement::vertex_in_set(std::size_t i, std::size_t j) const {
  return vertex_in_[i + j * xs_.size()] != 0;
}

Arrangement::Loc Arrangement::locate(const std::vector<Rat>& values,
                                     const Rat& v) const {
  auto it = std::lower_bound(values.begin(), values.end(), v);
  if (it != values.end() && *it == v) {
    return Loc{true, static_cast<std::size_t>(it - values.begin())};
  }
  assert(it != values.begin());
  return Loc{false, static_cast<std::size_t>(it - values.begin()) - 1};
}

bool Arrangement::vedge_sides_in_boxes(std::size_t i, std::size_t cj) const {
  if (i >= 1 && !cell_box(i - 1, cj)) return false;
  if (i + 1 < xs_.size() && !cell_box(i, cj)) return false;
  return true;
}

bool Arrangement::hedge_sides_in_boxes(std::size_t ci, std::size_t j) const {
  if (j >= 1 && !cell_box(ci, j - 1)) return false;
  if (j + 1 < ys_.size() && !cell_box(ci, j)) return false;
  return true;
}

bool Arrangement::vertex_rule_gamma(std::size_t i, std::size_t j) const {
  // both vertical and both horizontal arm pieces must lie in the lines
  if (j + 1 < ys_.size() && !vedge_line(i, j)) return false;
  if (j >= 1 && !vedge_line(i, j - 1)) return false;
  if (i + 1 < xs_.size() && !hedge_line(i, j)) return false;
  if (i >= 1 && !hedge_line(i - 1, j)) return false;
  return true;
}

bool Arrangement::vertex_rule_tau(std::size_t i, std::size_t j) const {
  if (!vertex_rule_gamma(i, j)) return false;
  if (i >= 1 && j >= 1 && !cell_box(i - 1, j - 1)) return false;
  if (i >= 1 && j + 1 < ys_.size() && !cell_box(i - 1, j)) return false;
  if (i + 1 < xs_.size() && j >= 1 && !cell_box(i, j - 1)) return false;
  if (i + 1 < xs_.size() && j + 1 < ys_.size() && !cell_box(i, j)) {
    return false;
  }
  return true;
}

bool Arrangement::point_rule(const Point& p, bool tau) const {
  const Loc lx = locate(xs_, p.x);
  const Loc ly = locate(ys_, p.y);
  if (!lx.exact && !ly.exact) return cell_box(lx.index, ly.index);
  if (lx.exact && !ly.exact) {
    return vedge_line(lx.index, ly.index) &&
           vedge_sides_in_boxes(lx.index, ly.index);
  }
  if (!lx.exact && ly.exact) {
    return hedge_line(lx.index, ly.index) &&
           hedge_sides_in_boxes(lx.index, ly.index);
  }
  return tau ? vertex_rule_tau(lx.index, ly.index)
             : vertex_rule_gamma(lx.index, ly.index);
}

bool Arrangement::trace_face_rule(const TraceInfo& t, bool) const {
  switch (t.kind) {
    case TraceKind::vertical:
      return vedge_line(t.fx, t.fy) && vedge_sides_in_boxes(t.fx, t.fy);
    case TraceKind::horizontal:
      return hedge_line(t.fx, t.fy) && hedge_sides_in_boxes(t.fx, t.fy);
    case TraceKind::diagonal:
      return cell_box(t.fx, t.fy);
    case TraceKind::constant_point:
      return true;  // covered by the vertex scan
  }
  return true;
}

namespace {

std::string face_witness(const std::string& what, const Rat& x, const Rat& y) {
  return what + " near (" + format_rat(x) + ", " + format_rat(y) + ")";
}

}  // namespace

bool Arrangement::tau_open(std::string* witness) const {
  return direct_open_scan(witness, /*tau=*/true);
}

bool Arrangement::gamma_open(std::string* witness) const {
  return direct_open_scan(witness, /*tau=*/false);
}

bool Arrangement::direct_open_scan(std::string* witness, bool tau) const {
  // points on set edges need the transversal arm through the side cells
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    for (std::size_t cj = 0; cj < nrows(); ++cj) {
      if (vedge_line(i, cj) && !vedge_sides_in_boxes(i, cj)) {
        if (witness) {
          *witness = face_witness("vertical edge point lacks a horizontal arm",
                                  xs_[i], midpoint(ys_[cj], ys_[cj + 1]));
        }
        return false;
      }
    }
  }
  for (std::size_t ci = 0; ci < ncols(); ++ci) {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (hedge_line(ci, j) && !hedge_sides_in_boxes(ci, j)) {
        if (witness) {
          *witness = face_witness("horizontal edge point lacks a vertical arm",
                                  midpoint(xs_[ci], xs_[ci + 1]), ys_[j]);
        }
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (!vertex_in_set(i, j)) continue;
      const bool ok =
          tau ? vertex_rule_tau(i, j) : vertex_rule_gamma(i, j);
      if (!ok) {
        if (witness) {
          *witness = face_witness("set vertex without an interior cross",
                                  xs_[i], ys_[j]);
        }
        return false;
      }
    }
  }
  for (const TraceInfo& t : traces_) {
    if (t.kind == TraceKind::constant_point) continue;
    for (std::int64_t n = t.seq->prefix_len() + 1; n < t.stable_from; ++n) {
      const Point p = t.seq->at(n);
      if (!contains(*desc_, p)) continue;
      if (!point_rule(p, tau)) {
        if (witness) {
          *witness = face_witness("trace point without an interior cross",
                                  p.x, p.y);
        }
        return false;
      }
    }
    if (!trace_face_rule(t, tau)) {
      if (witness) {
        *witness = face_witness("stable trace tail without interior crosses",
                                t.seq->tail_x.limit(), t.seq->tail_y.limit());
      }
      return false;
    }
  }
  return true;
}

bool Arrangement::accumulation_on_arm(std::size_t i, std::size_t j, int dx,
                                      int dy) const {
  for (const TraceInfo& t : traces_) {
    if (t.limit_xi != i || t.limit_yi != j) continue;
    if (dy != 0 && t.kind == TraceKind::vertical && t.approach_y == dy) {
      return true;
    }
    if (dx != 0 && t.kind == TraceKind::horizontal && t.approach_x == dx) {
      return true;
    }
  }
  return false;
}

bool Arrangement::accumulates_at(std::size_t i, std::size_t j) const {
  for (const TraceInfo& t : traces_) {
    if (t.kind == TraceKind::constant_point) continue;
    if (t.limit_xi == i && t.limit_yi == j) return true;
  }
  return false;
}

bool Arrangement::complement_vertex_ok(std::size_t i, std::size_t j,
                                       std::string* witness) const {
  auto fail = [&](const char* dir) {
    if (witness) {
      *witness = face_witness(
          std::string("complement vertex blocked ") + dir, xs_[i], ys_[j]);
    }
    return false;
  };
  if (j + 1 < ys_.size() &&
      (vedge_line(i, j) || accumulation_on_arm(i, j, 0, +1))) {
    return fail("upward");
  }
  if (j >= 1 && (vedge_line(i, j - 1) || accumulation_on_arm(i, j, 0, -1))) {
    return fail("downward");
  }
  if (i + 1 < xs_.size() &&
      (hedge_line(i, j) || accumulation_on_arm(i, j, +1, 0))) {
    return fail("rightward");
  }
  if (i >= 1 && (hedge_line(i - 1, j) || accumulation_on_arm(i, j, -1, 0))) {
    return fail("leftward");
  }
  return true;
}

bool Arrangement::gamma_open_complement(std::string* witness) const {
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    for (std::size_t cj = 0; cj < nrows(); ++cj) {
      if (vedge_line(i, cj)) continue;
      const bool left_free = i == 0 || !cell_box(i - 1, cj);
      const bool right_free = i + 1 >= xs_.size() || !cell_box(i, cj);
      if (!left_free || !right_free) {
        if (witness) {
          *witness = face_witness(
              "complement edge point with a box beside it", xs_[i],
              midpoint(ys_[cj], ys_[cj + 1]));
        }
        return false;
      }
    }
  }
  for (std::size_t ci = 0; ci < ncols(); ++ci) {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (hedge_line(ci, j)) continue;
      const bool below_free = j == 0 || !cell_box(ci, j - 1);
      const bool above_free = j + 1 >= ys_.size() || !cell_box(ci, j);
      if (!below_free || !above_free) {
        if (witness) {
          *witness = face_witness(
              "complement edge point with a box beside it",
              midpoint(xs_[ci], xs_[ci + 1]), ys_[j]);
        }
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (vertex_in_set(i, j)) continue;
      if (!complement_vertex_ok(i, j, witness)) return false;
    }
  }
  return true;
}

bool Arrangement::tau_closed(std::string* witness) const {
  // every point outside the set needs a product box avoiding the set
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    for (std::size_t cj = 0; cj < nrows(); ++cj) {
      if (vedge_line(i, cj)) continue;
      if ((i >= 1 && cell_box(i - 1, cj)) ||
          (i + 1 < xs_.size() && cell_box(i, cj))) {
        if (witness) {
          *witness =
              face_witness("box boundary leaks at vertical edge", xs_[i],
                           midpoint(ys_[cj], ys_[cj + 1]));
        }
        return false;
      }
    }
  }
  for (std::size_t ci = 0; ci < ncols(); ++ci) {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (hedge_line(ci, j)) continue;
      if ((j >= 1 && cell_box(ci, j - 1)) ||
          (j + 1 < ys_.size() && cell_box(ci, j))) {
        if (witness) {
          *witness = face_witness("box boundary leaks at horizontal edge",
                                  midpoint(xs_[ci], xs_[ci + 1]), ys_[j]);
        }
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (vertex_in_set(i, j)) continue;
      bool adherent = accumulates_at(i, j);
      if (!adherent) {
        if (j + 1 < ys_.size() && vedge_line(i, j)) adherent = true;
        if (j >= 1 && vedge_line(i, j - 1)) adherent = true;
        if (i + 1 < xs_.size() && hedge_line(i, j)) adherent = true;
        if (i >= 1 && hedge_line(i - 1, j)) adherent = true;
        if (i >= 1 && j >= 1 && cell_box(i - 1, j - 1)) adherent = true;
        if (i >= 1 && j + 1 < ys_.size() && cell_box(i - 1, j)) {
          adherent = true;
        }
        if (i + 1 < xs_.size() && j >= 1 && cell_box(i, j - 1)) {
          adherent = true;
        }
        if (i + 1 < xs_.size() && j + 1 < ys_.size() && cell_box(i, j)) {
          adherent = true;
        }
      }
      if (adherent) {
        if (witness) {
          *witness = "closure point outside the set at (" +
                     format_rat(xs_[i]) + ", " + format_rat(ys_[j]) + ")";
        }
        return false;
      }
    }
  }
  return true;
}

bool Arrangement::point_has_cross(const Point& p) const {
  return point_rule(p, /*tau=*/false);
}

bool Arrangement::point_has_box(const Point& p) const {
  return point_rule(p, /*tau=*/true);
}

bool Arrangement::punctured_cross_misses(const Point& p) const {
  const Loc lx = locate(xs_, p.x);
  const Loc ly = locate(ys_, p.y);
  // Each arm direction probes the face immediately beyond p: an edge piece
  // when p sits on a critical line, the surrounding cell otherwise. Traces
  // block an arm only when they accumulate into p itself, which requires p
  // to be the limit vertex.
  if (p.y < 1) {  // up: cell row ly.index in both the exact and interval case
    const std::size_t cj = ly.index;
    if (lx.exact) {
      if (vedge_line(lx.index, cj)) return false;
      if (ly.exact && accumulation_on_arm(lx.index, ly.index, 0, +1)) {
        return false;
      }
    } else if (cell_box(lx.index, cj)) {
      return false;
    }
  }
  if (p.y > 0) {  // down
    const std::size_t cj = ly.exact ? ly.index - 1 : ly.index;
    if (lx.exact) {
      if (vedge_line(lx.index, cj)) return false;
      if (ly.exact && accumulation_on_arm(lx.index, ly.index, 0, -1)) {
        return false;
      }
    } else if (cell_box(lx.index, cj)) {
      return false;
    }
  }
  if (p.x < 1) {  // right: cell column lx.index in both cases
    const std::size_t ci = lx.index;
    if (ly.exact) {
      if (hedge_line(ci, ly.index)) return false;
      if (lx.exact && accumulation_on_arm(lx.index, ly.index, +1, 0)) {
        return false;
      }
    } else if (cell_box(ci, ly.index)) {
      return false;
    }
  }
  if (p.x > 0) {  // left
    const std::size_t ci = lx.exact ? lx.index - 1 : lx.index;
    if (ly.exact) {
      if (hedge_line(ci, ly.index)) return false;
      if (lx.exact && accumulation_on_arm(lx.index, ly.index, -1, 0)) {
        return false;
      }
    } else if (cell_box(ci, ly.index)) {
      return false;
    }
  }
  return true;
}

namespace {

std::optional<Rat> radius_from_gaps(const std::vector<Rat>& gaps) {
  if (gaps.empty()) return std::nullopt;
  Rat m = gaps[0];
  for (const Rat& g : gaps) m = std::min(m, g);
  return m / 2;
}

}  // namespace

std::optional<Rat> Arrangement::cross_radius(const Point& p) const {
  if (!point_has_cross(p)) return std::nullopt;
  const Loc lx = locate(xs_, p.x);
  const Loc ly = locate(ys_, p.y);
  std::vector<Rat> gaps;
  if (p.y < 1) gaps.push_back(ys_[ly.index + 1] - p.y);
  if (p.y > 0) gaps.push_back(p.y - ys_[ly.exact ? ly.index - 1 : ly.index]);
  if (p.x < 1) gaps.push_back(xs_[lx.index + 1] - p.x);
  if (p.x > 0) gaps.push_back(p.x - xs_[lx.exact ? lx.index - 1 : lx.index]);
  return radius_from_gaps(gaps);
}

std::optional<Rat> Arrangement::box_radius(const Point& p) const {
  if (!point_has_box(p)) return std::nullopt;
  const Loc lx = locate(xs_, p.x);
  const Loc ly = locate(ys_, p.y);
  std::vector<Rat> gaps;
  if (p.y < 1) gaps.push_back(ys_[ly.index + 1] - p.y);
  if (p.y > 0) gaps.push_back(p.y - ys_[ly.exact ? ly.index - 1 : ly.index]);
  if (p.x < 1) gaps.push_back(xs_[lx.index + 1] - p.x);
  if (p.x > 0) gaps.push_back(p.x - xs_[lx.exact ? lx.index - 1 : lx.index]);
  return radius_from_gaps(gaps);
}

bool Arrangement::has_interior_cell(Point* witness) const {
  for (std::size_t ci = 0; ci < ncols(); ++ci) {
    for (std::size_t cj = 0; cj < nrows(); ++cj) {
      if (cell_box(ci, cj)) {
        if (witness) {
          *witness = Point{midpoint(xs_[ci], xs_[ci + 1]),
                           midpoint(ys_[cj], ys_[cj + 1])};
        }
        return true;
      }
    }
  }
  return false;
}

Arrangement::CoverNeeds Arrangement::cover_needs() const {
  CoverNeeds needs;
  Point interior;
  if (has_interior_cell(&interior)) {
    needs.uncoverable = true;
    needs.reason = "box with nonempty interior around " +
                   format_point(interior) + " defeats any finite cross";
    return needs;
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    for (std::size_t cj = 0; cj < nrows(); ++cj) {
      if (vedge_line(i, cj)) insert_sorted_unique(needs.cols, xs_[i]);
    }
  }
  for (std::size_t ci = 0; ci < ncols(); ++ci) {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (hedge_line(ci, j)) insert_sorted_unique(needs.rows, ys_[j]);
    }
  }
  std::vector<Point> sample;  // isolated set points, possibly on forced lines
  for (const TraceInfo& t : traces_) {
    switch (t.kind) {
      case TraceKind::diagonal:
        needs.uncoverable = true;
        needs.reason =
            "trace with injective coordinates in both axes cannot lie in a "
            "finite cross";
        return needs;
      case TraceKind::vertical:
        insert_sorted_unique(needs.cols, t.seq->tail_x.limit());
        break;
      case TraceKind::horizontal:
        insert_sorted_unique(needs.rows, t.seq->tail_y.limit());
        break;
      case TraceKind::constant_point:
        break;  // a vertex; picked up by the vertex scan below
    }
    for (std::int64_t n = t.seq->prefix_len() + 1; n < t.stable_from; ++n) {
      const Point p = t.seq->at(n);
      if (contains(*desc_, p)) sample.push_back(p);
    }
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (vertex_in_set(i, j)) sample.push_back(Point{xs_[i], ys_[j]});
    }
  }
  for (const Point& p : sample) {
    if (sorted_contains(needs.cols, p.x) || sorted_contains(needs.rows, p.y)) {
      continue;
    }
    if (std::find(needs.isolated.begin(), needs.isolated.end(), p) ==
        needs.isolated.end()) {
      needs.isolated.push_back(p);
    }
  }
  std::sort(needs.isolated.begin(), needs.isolated.end());
  return needs;
}

bool is_tau_open(const SetDesc& s) {
  validate(s);
  return Arrangement(s).tau_open();
}

bool is_gamma_open(const SetDesc& s, GammaMode mode) {
  validate(s);
  const Arrangement arr(s);
  return mode == GammaMode::direct ? arr.gamma_open()
                                   : arr.gamma_open_complement();
}

bool is_tau_closed(const SetDesc& s, std::string* witness) {
  validate(s);
  return Arrangement(s).tau_closed(witness);
}

bool cross_arms_inside(const SetDesc& s, const Point& p, const Rat& radius,
                       int samples_per_arm) {
  if (radius <= 0) return false;
  for (int k = 1; k <= samples_per_arm; ++k) {
    const Rat t = radius * k / (samples_per_arm + 1);
    const Point up{p.x, p.y + t}, down{p.x, p.y - t};
    const Point right{p.x + t, p.y}, left{p.x - t, p.y};
    if (in_unit_interval(up.y) && !contains(s, up)) return false;
    if (in_unit_interval(down.y) && !contains(s, down)) return false;
    if (in_unit_interval(right.x) && !contains(s, right)) return false;
    if (in_unit_interval(left.x) && !contains(s, left)) return false;
  }
  return true;
}

bool closed_box_inside(const SetDesc& s, const Point& p, const Rat& radius,
                       int samples_per_side) {
  if (radius <= 0) return false;
  const int m = samples_per_side;
  for (int ix = -m; ix <= m; ++ix) {
    for (int iy = -m; iy <= m; ++iy) {
      const Rat qx = p.x + radius * ix / m;
      const Rat qy = p.y + radius * iy / m;
      if (!in_unit_interval(qx) || !in_unit_interval(qy)) continue;
      if (!contains(s, Point{qx, qy})) return false;
    }
  }
  return true;
}

}  // namespace crosstopo
