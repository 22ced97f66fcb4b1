#include "crosstopo/ultra.hpp"

#include <algorithm>

namespace crosstopo {

UltraModel make_ultra_model(int depth) {
  if (depth < 1 || depth > kMaxUltraDepth) {
    throw ValidationError("model depth must lie in [1," +
                          std::to_string(kMaxUltraDepth) + "], got " +
                          std::to_string(depth));
  }
  return UltraModel{depth};
}

int point_bit(std::uint32_t code, int depth, int index) {
  return static_cast<int>((code >> (depth - index)) & 1u);
}

std::string format_bits(std::uint32_t code, int depth) {
  std::string out(static_cast<std::size_t>(depth), '0');
  for (int i = 1; i <= depth; ++i) {
    if (point_bit(code, depth, i)) out[static_cast<std::size_t>(i - 1)] = '1';
  }
  return out;
}

std::uint32_t parse_bits(const std::string& bits, int depth) {
  if (static_cast<int>(bits.size()) != depth) {
    throw ValidationError("bit string '" + bits + "' does not have length " +
                          std::to_string(depth));
  }
  std::uint32_t code = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ValidationError("bit string '" + bits + "' has a non-bit char");
    }
    code = (code << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return code;
}

int first_diff_index(std::uint32_t a, std::uint32_t b, int depth) {
  if (a == b) return 0;
  for (int i = 1; i <= depth; ++i) {
    if (point_bit(a, depth, i) != point_bit(b, depth, i)) return i;
  }
  return 0;
}

Rat ultra_distance(std::uint32_t a, std::uint32_t b, int depth) {
  const int idx = first_diff_index(a, b, depth);
  if (idx == 0) return Rat(0);
  return Rat(1) / Rat(BigInt(1) << idx);
}

std::uint32_t cylinder_min_point(const UltraModel& m, const Cylinder& c) {
  return c.prefix << (m.depth - c.prefix_depth);
}

bool cylinder_contains(const UltraModel& m, const Cylinder& c,
                       std::uint32_t code) {
  return (code >> (m.depth - c.prefix_depth)) == c.prefix;
}

bool Clopen::empty() const {
  return std::find(mask.begin(), mask.end(), char(1)) == mask.end();
}

bool Clopen::total() const {
  return std::find(mask.begin(), mask.end(), char(0)) == mask.end();
}

std::size_t Clopen::size() const {
  return static_cast<std::size_t>(
      std::count(mask.begin(), mask.end(), char(1)));
}

std::uint32_t Clopen::min_point() const {
  for (std::uint32_t code = 0; code < mask.size(); ++code) {
    if (mask[code]) return code;
  }
  throw ValidationError("empty clopen set has no points");
}

std::vector<Cylinder> Clopen::decompose(int) const {
  // greedy: repeatedly take the largest cylinder at the smallest uncovered
  // member; yields the canonical maximal-cylinder decomposition
  std::vector<Cylinder> out;
  std::vector<char> left = mask;
  const int depth = model_depth;
  for (std::uint32_t code = 0; code < left.size(); ++code) {
    if (!left[code]) continue;
    int d = depth;
    // grow the cylinder while the doubled block stays inside the set and
    // aligned at this code
    while (d > 0) {
      const int cand = d - 1;
      const std::uint32_t width = 1u << (depth - cand);
      const std::uint32_t base = (code >> (depth - cand)) << (depth - cand);
      if (base != code) break;  // not aligned at the coarser depth
      bool full = true;
      for (std::uint32_t k = 0; k < width; ++k) {
        if (!mask[base + k]) {
          full = false;
          break;
        }
      }
      if (!full) break;
      d = cand;
    }
    const std::uint32_t width = 1u << (depth - d);
    out.push_back(Cylinder{d, code >> (depth - d)});
    for (std::uint32_t k = 0; k < width; ++k) left[code + k] = 0;
  }
  return out;
}

Clopen clopen_from_cylinders(const UltraModel& m,
                             const std::vector<Cylinder>& cylinders) {
  Clopen out;
  out.model_depth = m.depth;
  out.mask.assign(m.point_count(), 0);
  for (const Cylinder& c : cylinders) {
    if (c.prefix_depth < 0 || c.prefix_depth > m.depth) {
      throw ValidationError("cylinder depth " + std::to_string(c.prefix_depth) +
                            " outside [0," + std::to_string(m.depth) + "]");
    }
    if (c.prefix_depth < 32 && c.prefix >= (1u << c.prefix_depth)) {
      throw ValidationError("cylinder prefix out of range");
    }
    const std::uint32_t width = 1u << (m.depth - c.prefix_depth);
    const std::uint32_t base = c.prefix << (m.depth - c.prefix_depth);
    for (std::uint32_t k = 0; k < width; ++k) out.mask[base + k] = 1;
  }
  return out;
}

Clopen clopen_empty(const UltraModel& m) {
  Clopen out;
  out.model_depth = m.depth;
  out.mask.assign(m.point_count(), 0);
  return out;
}

std::vector<Clopen> disjointify_cover(const UltraModel& m,
                                      const std::vector<Clopen>& cover) {
  std::vector<char> seen(m.point_count(), 0);
  std::vector<Clopen> out;
  out.reserve(cover.size());
  for (const Clopen& u : cover) {
    if (u.model_depth != m.depth) {
      throw ValidationError("cover element depth mismatch");
    }
    Clopen v = clopen_empty(m);
    for (std::uint32_t code = 0; code < m.point_count(); ++code) {
      if (u.mask[code] && !seen[code]) {
        v.mask[code] = 1;
        seen[code] = 1;
      }
    }
    out.push_back(std::move(v));
  }
  for (std::uint32_t code = 0; code < m.point_count(); ++code) {
    if (!seen[code]) {
      throw UncoveredPointError(format_bits(code, m.depth));
    }
  }
  return out;
}

bool is_partition(const UltraModel& m, const std::vector<Clopen>& parts) {
  std::vector<int> hits(m.point_count(), 0);
  for (const Clopen& p : parts) {
    if (p.model_depth != m.depth) return false;
    for (std::uint32_t code = 0; code < m.point_count(); ++code) {
      if (p.mask[code]) ++hits[code];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace crosstopo
