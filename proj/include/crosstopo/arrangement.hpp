// Exact decision engine for topology predicates on a SetDesc.
//
// All primitives are axis-parallel with rational breakpoints, so the lines
// through the finitely many critical coordinates cut the square into an
// arrangement of open cells, open edges and vertices on which membership in
// the boxes (2-dimensional part) and in boxes-plus-segments (the
// >=1-dimensional part) is constant. Sequence traces contribute isolated
// points; each tail eventually settles into a single face of the
// arrangement, computable from the tail formulas, which reduces every
// openness/closedness question to finitely many face checks:
//
//   - a point of the set interior to an open cell has a cross (or a box)
//     inside the set iff the cell is generically inside the boxes;
//   - a point on an open edge needs the edge generically inside the
//     lines and, for the transversal arm, the side cells inside the boxes;
//   - a vertex needs its adjacent edges (cross-topology) or adjacent edges
//     and cells (product topology) generically inside;
//   - on the complement side the same faces must be generically free of
//     the set, and no trace may accumulate along the probed arm.
//
// Deletions and single points always sit at vertices (their coordinates are
// critical), traces accumulate only at their limit vertex, and any fixed
// line meets a non-constant tail coordinate at most once; these facts make
// the finitely many checks sound.

#pragma once

#include "crosstopo/setdesc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crosstopo {

class Arrangement {
 public:
  /// Builds the critical arrangement. `s` must be validated.
  explicit Arrangement(const SetDesc& s);

  // -- whole-set predicates --

  bool tau_open(std::string* witness = nullptr) const;
  bool gamma_open(std::string* witness = nullptr) const;
  /// Gamma-openness of the complement of the set within the square.
  bool gamma_open_complement(std::string* witness = nullptr) const;
  bool tau_closed(std::string* witness = nullptr) const;

  // -- pointwise queries (p need not have critical coordinates) --

  /// True iff some full cross of positive radius around p lies in the set.
  /// Meaningful for p in the set (callers check membership separately).
  bool point_has_cross(const Point& p) const;
  /// True iff some closed box of positive radius around p (intersected
  /// with the square) lies in the set.
  bool point_has_box(const Point& p) const;
  /// True iff some punctured cross around p misses the set entirely,
  /// i.e. p is not adherent to the set in the cross-topology sense.
  bool punctured_cross_misses(const Point& p) const;

  /// Rational radius witnessing point_has_cross (half the gap to the next
  /// critical feature in each live direction); nullopt when no cross fits.
  std::optional<Rat> cross_radius(const Point& p) const;
  std::optional<Rat> box_radius(const Point& p) const;

  /// True iff some arrangement cell lies generically inside the boxes,
  /// i.e. the set has nonempty product interior.
  bool has_interior_cell(Point* witness = nullptr) const;

  /// What a finite cross must provide to cover the set: lines that are
  /// forced (edges of the set and constant-coordinate trace tails),
  /// isolated points still needing a line through them, or a proof that no
  /// finite cross can work.
  struct CoverNeeds {
    std::vector<Rat> cols;  // forced vertical lines, sorted unique
    std::vector<Rat> rows;
    std::vector<Point> isolated;
    bool uncoverable = false;
    std::string reason;
  };
  CoverNeeds cover_needs() const;

  const std::vector<Rat>& xs() const { return xs_; }
  const std::vector<Rat>& ys() const { return ys_; }

 private:
  enum class TraceKind { constant_point, vertical, horizontal, diagonal };

  struct TraceInfo {
    const SeqSpec* seq = nullptr;
    TraceKind kind = TraceKind::constant_point;
    std::int64_t stable_from = 1;  // tail indices >= this sit in the face below
    // Face containing the stable tail: vertical -> vedge(fx, fy),
    // horizontal -> hedge(fx, fy), diagonal -> cell(fx, fy).
    std::size_t fx = 0, fy = 0;
    // Limit point as vertex indices.
    std::size_t limit_xi = 0, limit_yi = 0;
    int approach_x = 0, approach_y = 0;
  };

  // generic face membership
  bool cell_box(std::size_t ci, std::size_t cj) const;
  bool vedge_line(std::size_t i, std::size_t cj) const;
  bool hedge_line(std::size_t ci, std::size_t j) const;
  bool vertex_in_set(std::size_t i, std::size_t j) const;

  std::size_t ncols() const { return xs_.size() - 1; }  // cell columns
  std::size_t nrows() const { return ys_.size() - 1; }

  // exact location: index if v == xs_[index], otherwise the interval index
  struct Loc {
    bool exact;
    std::size_t index;  // critical index if exact, else interval index
  };
  Loc locate(const std::vector<Rat>& values, const Rat& v) const;

  // direct-mode scan shared by tau_open and gamma_open
  bool direct_open_scan(std::string* witness, bool tau) const;

  // face rules for an arbitrary set point
  bool point_rule(const Point& p, bool tau) const;
  // rule for the stable tail face of a trace
  bool trace_face_rule(const TraceInfo& t, bool tau) const;

  bool vertex_rule_tau(std::size_t i, std::size_t j) const;
  bool vertex_rule_gamma(std::size_t i, std::size_t j) const;
  bool vedge_sides_in_boxes(std::size_t i, std::size_t cj) const;
  bool hedge_sides_in_boxes(std::size_t ci, std::size_t j) const;

  // complement-side helpers
  bool complement_vertex_ok(std::size_t i, std::size_t j,
                            std::string* witness) const;
  bool accumulation_on_arm(std::size_t i, std::size_t j, int dx, int dy) const;
  bool accumulates_at(std::size_t i, std::size_t j) const;

  const SetDesc* desc_;
  std::vector<Rat> xs_, ys_;
  std::vector<TraceInfo> traces_;
  // caches, computed lazily would complicate const-ness; filled on build
  std::vector<char> cell_box_, vedge_line_, hedge_line_, vertex_in_;
};

// Module-level predicates over descriptions (validate + build + decide).

bool is_tau_open(const SetDesc& s);

enum class GammaMode { direct, complement };
bool is_gamma_open(const SetDesc& s, GammaMode mode = GammaMode::direct);

bool is_tau_closed(const SetDesc& s, std::string* witness = nullptr);

/// Checks that the open cross of radius `radius` at p lies inside the set,
/// by sampling interior arm points via contains(); used as an independent
/// replay of cross_radius witnesses.
bool cross_arms_inside(const SetDesc& s, const Point& p, const Rat& radius,
                       int samples_per_arm = 4);

/// Same replay for closed box witnesses.
bool closed_box_inside(const SetDesc& s, const Point& p, const Rat& radius,
                       int samples_per_side = 3);

}  // namespace crosstopo
