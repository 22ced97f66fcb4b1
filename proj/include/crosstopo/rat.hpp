// Exact rational scalar used throughout the library.
//
// Every predicate in this project is a decision, not an approximation, so
// all coordinates, levels and radii are arbitrary-precision rationals kept
// in lowest terms. Serialized form is always "num/den" with den > 0.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace crosstopo {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Input or structural validation failure; `path` names the offending
/// field (e.g. "parts[2].span.lo") when known.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::string message, std::string path = "")
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Parses "num/den" (or a bare integer "num") into a rational.
/// Throws ValidationError on malformed text or a zero denominator.
Rat parse_rat(const std::string& text, const std::string& path = "");

/// Canonical form "num/den" in lowest terms, den >= 1 ("3" -> "3/1").
std::string format_rat(const Rat& r);

inline Rat rat(long long num, long long den = 1) {
  return Rat(BigInt(num), BigInt(den));
}

bool is_integer(const Rat& r);

/// floor as a true floor (rounds toward -inf, unlike cpp_int division).
BigInt floor_rat(const Rat& r);

/// Smallest integer strictly greater than r.
BigInt next_integer_above(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / 2; }

inline bool in_unit_interval(const Rat& r) { return r >= 0 && r <= 1; }

/// Fixed-point decimal rendering (for SVG coordinates); exact integer
/// arithmetic, deterministic across platforms.
std::string rat_to_decimal(const Rat& r, int digits = 6);

}  // namespace crosstopo
