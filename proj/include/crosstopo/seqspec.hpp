// Eventually-rational point sequences: a finite prefix followed by a
// closed-form tail. Tail coordinates follow the grammar
//
//     value(n) = c + a / (n + b)        (a = 0 gives the constant c)
//
// with rational c, a, b and b >= 0. A non-constant coordinate is strictly
// monotone in n, injective, and converges to c, which is what makes
// membership, cross-membership and limits of these sequences decidable by
// formula inspection.

#pragma once

#include "crosstopo/geometry.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace crosstopo {

struct CoordFormula {
  Rat c;
  Rat a;
  Rat b;

  bool constant() const { return a == 0; }

  /// Value at index n (n >= 1).
  Rat value(std::int64_t n) const;

  /// Limit as n -> infinity (c for both constant and non-constant forms).
  const Rat& limit() const { return c; }

  /// +1 if the tail approaches c from above, -1 from below, 0 if constant.
  int approach_side() const { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

  /// The unique rational n with value(n) == v, when one exists. For a
  /// constant formula there is no single solution; callers must branch on
  /// constant() first.
  std::optional<Rat> solve(const Rat& v) const;

  /// Smallest index m with value(n) strictly between c and `bound` for all
  /// n >= m. `bound` must lie strictly on the approach side of c.
  std::int64_t index_within(const Rat& bound) const;

  bool operator==(const CoordFormula& o) const {
    return c == o.c && a == o.a && b == o.b;
  }
};

struct SeqSpec {
  std::vector<Point> prefix;
  CoordFormula tail_x;
  CoordFormula tail_y;

  std::int64_t prefix_len() const {
    return static_cast<std::int64_t>(prefix.size());
  }

  /// n-th point of the sequence, 1-based; tail formulas apply for
  /// n > prefix_len().
  Point at(std::int64_t n) const;

  Point tail_limit() const { return Point{tail_x.limit(), tail_y.limit()}; }

  /// True when the tail is a single repeated point (both formulas constant).
  bool tail_is_constant_point() const {
    return tail_x.constant() && tail_y.constant();
  }

  bool operator==(const SeqSpec& o) const {
    return prefix == o.prefix && tail_x == o.tail_x && tail_y == o.tail_y;
  }
};

/// Throws ValidationError unless every generated point lies in [0,1]^2 and
/// the formulas respect the grammar (b >= 0, tail stays in range).
void validate_seq(const SeqSpec& seq, const std::string& path);

/// Index n with seq.at(n) == p, if any (smallest such n). Decides
/// membership of p in the trace {seq.at(n) : n >= 1}.
std::optional<std::int64_t> trace_index_of(const SeqSpec& seq, const Point& p);

}  // namespace crosstopo
