#include "crosstopo/seqspec.hpp"

namespace crosstopo {

Rat CoordFormula::value(std::int64_t n) const {
  if (constant()) return c;
  return c + a / (Rat(n) + b);
}

std::optional<Rat> CoordFormula::solve(const Rat& v) const {
  if (constant()) return std::nullopt;  // caller branches on constant()
  if (v == c) return std::nullopt;      // never attained, only approached
  return a / (v - c) - b;
}

std::int64_t CoordFormula::index_within(const Rat& bound) const {
  // |a/(n+b)| < |bound - c|  <=>  n > |a|/|bound - c| - b
  const Rat gap = rat_abs(bound - c);
  const Rat threshold = rat_abs(a) / gap - b;
  BigInt m = next_integer_above(threshold);
  if (m < 1) m = 1;
  return static_cast<std::int64_t>(m);
}

Point SeqSpec::at(std::int64_t n) const {
  if (n >= 1 && n <= prefix_len()) {
    return prefix[static_cast<std::size_t>(n - 1)];
  }
  return Point{tail_x.value(n), tail_y.value(n)};
}

namespace {

void validate_formula(const CoordFormula& f, std::int64_t first_tail_index,
                      const std::string& path) {
  if (f.b < 0) {
    throw ValidationError("tail offset b must be >= 0, got " + format_rat(f.b),
                          path);
  }
  if (!in_unit_interval(f.c)) {
    throw ValidationError("tail limit c = " + format_rat(f.c) +
                              " outside [0,1]",
                          path);
  }
  // Non-constant tails are monotone toward c, so the extreme value over
  // n >= first_tail_index is attained at the first index.
  const Rat first = f.value(first_tail_index);
  if (!in_unit_interval(first)) {
    throw ValidationError("tail value at n=" + std::to_string(first_tail_index)
                              + " is " + format_rat(first) + ", outside [0,1]",
                          path);
  }
}

}  // namespace

void validate_seq(const SeqSpec& seq, const std::string& path) {
  for (std::size_t i = 0; i < seq.prefix.size(); ++i) {
    validate_point(seq.prefix[i], path + ".prefix[" + std::to_string(i) + "]");
  }
  const std::int64_t first = seq.prefix_len() + 1;
  validate_formula(seq.tail_x, first, path + ".tail_x");
  validate_formula(seq.tail_y, first, path + ".tail_y");
}

namespace {

// Tail indices n > prefix_len with tail coordinate formula equal to v.
// For a constant formula every index qualifies; represented as nullopt
// with *all_match set.
std::optional<std::int64_t> tail_solution(const CoordFormula& f, const Rat& v,
                                          std::int64_t prefix_len,
                                          bool* all_match) {
  *all_match = false;
  if (f.constant()) {
    *all_match = (v == f.c);
    return std::nullopt;
  }
  const auto n = f.solve(v);
  if (!n || !is_integer(*n)) return std::nullopt;
  const BigInt ni = numerator(*n);
  if (ni <= prefix_len) return std::nullopt;
  return static_cast<std::int64_t>(ni);
}

}  // namespace

std::optional<std::int64_t> trace_index_of(const SeqSpec& seq,
                                           const Point& p) {
  for (std::size_t i = 0; i < seq.prefix.size(); ++i) {
    if (seq.prefix[i] == p) return static_cast<std::int64_t>(i + 1);
  }
  const std::int64_t len = seq.prefix_len();
  bool all_x = false, all_y = false;
  const auto nx = tail_solution(seq.tail_x, p.x, len, &all_x);
  const auto ny = tail_solution(seq.tail_y, p.y, len, &all_y);
  if (all_x && all_y) return len + 1;  // constant tail point
  if (all_x && ny) return ny;
  if (all_y && nx) return nx;
  if (nx && ny && *nx == *ny) return nx;
  return std::nullopt;
}

}  // namespace crosstopo
