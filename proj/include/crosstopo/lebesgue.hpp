// Two harnesses built on the same machinery:
//
//   * refute_pointwise_identity — searches for a probe point at which a
//     candidate sequence of piecewise row/column maps visibly fails to
//     converge to the identity in the cross-topology, with the evidence
//     replayable through the sequence-limit machinery;
//   * baire1_approximate / verify_pointwise_convergence — the constructive
//     approximation of separately continuous maps over the ultrametric
//     model, with exact error accounting per cylinder level.

#pragma once

#include "crosstopo/gammatop.hpp"
#include "crosstopo/ultra.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace crosstopo {

// ---------------------------------------------------------------------------
// candidate sequences of piecewise row/column maps
// ---------------------------------------------------------------------------

struct PieceTag {
  bool is_row;  // row b: (x,y) -> (x,b); column a: (x,y) -> (a,y)
  Rat level;
};

struct Piece {
  Rat x_lo, x_hi, y_lo, y_hi;  // closed bounds
  PieceTag tag;

  bool covers(const Point& p) const {
    return p.x >= x_lo && p.x <= x_hi && p.y >= y_lo && p.y <= y_hi;
  }
};

struct PiecewiseMap {
  std::vector<Piece> pieces;
};

struct CandidateSeq {
  std::vector<PiecewiseMap> maps;
};

/// Pieces must cover the square with pairwise disjoint interiors; levels in
/// [0,1]. Throws ValidationError naming the map and piece otherwise.
void validate(const CandidateSeq& c);

/// First piece (in list order) containing p decides the value.
Point eval(const PiecewiseMap& m, const Point& p);

// ---------------------------------------------------------------------------
// refutation of pointwise cross-topology convergence to the identity
// ---------------------------------------------------------------------------

struct RefuteWitness {
  Point probe;
  std::int64_t start_index = 1;  // evidence covers indices >= start_index
  std::string reason;  // "free-coordinate-bounded-away" | "free-coordinate-oscillates"
  Rat delta;           // error scale witnessed
  std::vector<Point> images;  // f_n(probe) for every candidate index
};

class InsufficientEvidence : public std::runtime_error {
 public:
  explicit InsufficientEvidence(const std::string& what)
      : std::runtime_error(what) {}
};

/// Searches the given probes (or an auto-refining center grid up to 64x64)
/// for a point whose image sequence visibly stays away from the probe.
/// Throws InsufficientEvidence instead of fabricating a verdict when the
/// candidate list is shorter than the inspection window or no probe shows
/// persistent divergence.
RefuteWitness refute_pointwise_identity(const CandidateSeq& c,
                                        const std::vector<Point>& probes = {},
                                        int min_window = 8);

struct WitnessReplay {
  bool confirmed = false;
  std::string method;  // "seqspec-fit+gamma-limit" | "parity-split+gamma-limit" | "window-clusters"
  std::string detail;
};

/// Independently re-checks a witness: fits the image sequence (or its
/// temporal value groups) into sequence specs, runs the gamma-limit
/// machinery, and confirms the limit is absent or differs from the probe.
WitnessReplay replay_refutation(const RefuteWitness& w);

// ---------------------------------------------------------------------------
// separately continuous oracles on the ultrametric model
// ---------------------------------------------------------------------------

struct SepOracle {
  std::string name;
  std::function<Rat(std::uint32_t, const Rat&)> eval;  // (x code, y) -> value
  std::optional<Rat> lipschitz_x;  // declared constant, checked by sampling
};

/// Built-in test oracles: "constant-x", "depth1", "lipschitz".
SepOracle builtin_oracle(const std::string& name, int model_depth);
std::vector<std::string> builtin_oracle_names();

/// Samples pairs against the declared Lipschitz constant; true when the
/// declaration held on every sampled pair (vacuously when undeclared).
bool check_lipschitz_declaration(const SepOracle& f, const UltraModel& m,
                                 int samples_per_depth = 4);

struct Baire1Approximant {
  SepOracle oracle;
  int model_depth = 0;
  int level = 0;                        // n
  std::vector<std::uint32_t> reps;      // representative per depth-n cylinder

  std::uint32_t representative_of(std::uint32_t x) const {
    return reps[x >> (model_depth - level)];
  }
  Rat operator()(std::uint32_t x, const Rat& y) const {
    return oracle.eval(representative_of(x), y);
  }
};

/// Partitions the model into depth-n cylinders, fixes the lexicographically
/// smallest point of each as representative, and returns the map
/// (x, y) -> f(rep(x), y) with its table. Throws on level outside [1, D].
Baire1Approximant baire1_approximate(const SepOracle& f, const UltraModel& m,
                                     int level);

struct ConvergenceSample {
  std::uint32_t x = 0;
  Rat y;
  std::vector<Rat> errors;  // e_n = |f_n(x,y) - f(x,y)| for n = 1..n_max
  bool envelope_monotone = true;
  bool lipschitz_bound_ok = true;  // e_n <= L 2^-n when L declared
};

struct ConvergenceReport {
  int n_max = 0;
  std::vector<ConvergenceSample> samples;
  bool final_errors_zero = true;  // e_D == 0 at every sample when n_max == D
  bool all_lipschitz_ok = true;
};

ConvergenceReport verify_pointwise_convergence(
    const SepOracle& f, const UltraModel& m, int n_max,
    const std::vector<std::pair<std::uint32_t, Rat>>& samples);

}  // namespace crosstopo
