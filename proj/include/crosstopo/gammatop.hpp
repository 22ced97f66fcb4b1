// Decidable cross-topology predicates: discreteness certificates for
// injective-coordinate sequences, local product/cross coincidence
// neighborhoods on finite crosses, the compactness characterization
// (compact + finite cross cover), and limits of eventually-rational
// sequences in the cross-topology.

#pragma once

#include "crosstopo/arrangement.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace crosstopo {

// ---------------------------------------------------------------------------
// gamma-discreteness (injective coordinates in both axes)
// ---------------------------------------------------------------------------

struct DiscreteCertificate {
  std::int64_t pairs_checked = 0;
  std::string tail_note;
};

struct DiscreteCounterexample {
  char coordinate;  // 'x' or 'y'
  Rat value;        // the shared coordinate value
  std::string first;
  std::string second;
};

struct DiscreteResult {
  std::optional<DiscreteCertificate> certificate;
  std::optional<DiscreteCounterexample> counterexample;
  bool certified() const { return certificate.has_value(); }
};

DiscreteResult verify_gamma_discrete(const std::vector<Point>& points);
DiscreteResult verify_gamma_discrete(const SeqSpec& seq);

// ---------------------------------------------------------------------------
// local product/cross coincidence on cross(A x B)
// ---------------------------------------------------------------------------

struct Coincidence {
  Interval u;  // open interval around p.x with |u ∩ A| <= 1
  Interval v;
  Point c;
  std::vector<std::string> replay_log;
};

/// A: finite x-levels, B: finite y-levels, p a point on cross(A x B).
/// Throws ValidationError when the cross is empty or p is off it.
Coincidence local_coincidence_neighborhood(std::vector<Rat> A,
                                           std::vector<Rat> B, const Point& p);

// ---------------------------------------------------------------------------
// gamma-compactness
// ---------------------------------------------------------------------------

struct GammaCompactCert {
  std::vector<std::string> compact_witness;
  std::vector<Point> cross_cover;
};

struct GammaCompactRefusal {
  int failed_condition;  // 1: not compact (closed), 2: no finite cross
  std::string reason;
};

using GammaCompactResult = std::variant<GammaCompactCert, GammaCompactRefusal>;

GammaCompactResult is_gamma_compact(const SetDesc& k);

/// Symbolic replay of a certificate: re-derives what the set needs and
/// checks the cover provides it, via cross_of_finite membership.
bool cross_cover_includes(const SetDesc& k, const std::vector<Point>& cover);

/// A point of k off cross(cover \ {cover[drop]}), when one exists; used to
/// replay minimality of certificates.
std::optional<Point> point_off_reduced_cross(const SetDesc& k,
                                             const std::vector<Point>& cover,
                                             std::size_t drop);

// ---------------------------------------------------------------------------
// gamma-limits of sequences
// ---------------------------------------------------------------------------

struct GammaLimitConverges {
  Point limit;
  std::int64_t tail_index;  // smallest m with seq(n) on cross(limit) for n >= m
};

struct GammaLimitDiverges {
  std::string witness_kind;  // "injective-both-coordinates" | "two-cluster-values"
  std::vector<std::string> detail;
};

struct GammaLimitResult {
  std::optional<GammaLimitConverges> converges;
  std::optional<GammaLimitDiverges> diverges;
};

GammaLimitResult gamma_limit(const SeqSpec& seq);

// ---------------------------------------------------------------------------
// interior / closure point queries (the algebra is not closed under these
// operators, so only membership tests are exposed)
// ---------------------------------------------------------------------------

/// p lies in the set and carries a full cross of positive radius inside it.
bool gamma_interior_contains(const SetDesc& s, const Point& p);

/// Every punctured cross around p meets the set (or p itself belongs to it).
bool gamma_closure_contains(const SetDesc& s, const Point& p);

// ---------------------------------------------------------------------------
// finite-window convergence evidence (shared with the refutation harness)
// ---------------------------------------------------------------------------

struct WindowVerdict {
  bool eventually_on_cross = false;
  std::int64_t cross_tail_index = 0;  // 1-based; 0 when never settled
  // Distinct values taken by the window tail, when finitely many.
  std::vector<Point> tail_values;
  bool confirms_divergence_from(const Point& target) const;
};

/// Examines a finite window (w_1..w_L) against a target: records whether a
/// final stretch stays on cross(target) and which values the tail takes.
WindowVerdict check_window_against(std::span<const Point> window,
                                   const Point& target);

/// Attempts to express w_1..w_L as a SeqSpec (prefix + formula tails).
/// Succeeds for eventually-constant and simple-pole coordinate patterns.
std::optional<SeqSpec> fit_seqspec(std::span<const Point> window);

}  // namespace crosstopo
