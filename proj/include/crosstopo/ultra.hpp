// Depth-bounded ultrametric model: points are bit-strings of a fixed
// length D, d(x,y) = 2^-(first differing index), and the clopen algebra is
// generated by prefix cylinders. Depth-n cylinders partition the space
// into 2^n pieces of diameter <= 2^-n.

#pragma once

#include "crosstopo/rat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crosstopo {

constexpr int kMaxUltraDepth = 16;

struct UltraModel {
  int depth = 0;

  std::uint32_t point_count() const { return 1u << depth; }
};

UltraModel make_ultra_model(int depth);  // throws on depth outside [1,16]

/// Bit i (1-based, i <= depth) of a point code; bit 1 is the leading bit.
int point_bit(std::uint32_t code, int depth, int index);

std::string format_bits(std::uint32_t code, int depth);
std::uint32_t parse_bits(const std::string& bits, int depth);

/// 1-based index of the first differing bit; 0 when equal.
int first_diff_index(std::uint32_t a, std::uint32_t b, int depth);

/// 2^-(first differing index), exactly; 0 when equal.
Rat ultra_distance(std::uint32_t a, std::uint32_t b, int depth);

/// All codes extending a prefix of `prefix_depth` bits.
struct Cylinder {
  int prefix_depth = 0;       // 0 denotes the whole space
  std::uint32_t prefix = 0;   // prefix value, < 2^prefix_depth
};

/// Lexicographically smallest point of the cylinder (prefix, then zeros).
std::uint32_t cylinder_min_point(const UltraModel& m, const Cylinder& c);

bool cylinder_contains(const UltraModel& m, const Cylinder& c,
                       std::uint32_t code);

/// A clopen subset, represented extensionally over the finite model.
struct Clopen {
  int model_depth = 0;
  std::vector<char> mask;  // 2^model_depth entries

  bool at(std::uint32_t code) const { return mask[code] != 0; }
  bool empty() const;
  bool total() const;
  std::size_t size() const;
  /// Smallest member code; throws on the empty set.
  std::uint32_t min_point() const;
  /// Canonical decomposition into maximal disjoint cylinders, ordered by
  /// their smallest point.
  std::vector<Cylinder> decompose(int) const;
  std::vector<Cylinder> decompose() const { return decompose(0); }
};

Clopen clopen_from_cylinders(const UltraModel& m,
                             const std::vector<Cylinder>& cylinders);
Clopen clopen_empty(const UltraModel& m);

class UncoveredPointError : public ValidationError {
 public:
  UncoveredPointError(std::string witness_bits)
      : ValidationError("cover does not exhaust the space; uncovered point " +
                        witness_bits),
        witness(std::move(witness_bits)) {}
  std::string witness;
};

/// Ordered difference construction: V_0 = U_0, V_a = U_a minus the union of
/// all earlier U. The output refines the input, keeps its order, and is a
/// partition of the space. Throws UncoveredPointError when the input union
/// misses a point.
std::vector<Clopen> disjointify_cover(const UltraModel& m,
                                      const std::vector<Clopen>& cover);

/// Checks pairwise disjointness and totality, exhaustively over the model.
bool is_partition(const UltraModel& m, const std::vector<Clopen>& parts);

}  // namespace crosstopo
