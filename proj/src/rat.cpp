#include "crosstopo/rat.hpp"

#include <cctype>

namespace crosstopo {

namespace {

bool parse_big_int(const std::string& s, BigInt* out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  *out = BigInt(s);
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text, const std::string& path) {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  if (slash == std::string::npos) {
    if (!parse_big_int(text, &num)) {
      throw ValidationError("malformed rational '" + text + "'", path);
    }
  } else {
    const std::string num_part = text.substr(0, slash);
    const std::string den_part = text.substr(slash + 1);
    if (!parse_big_int(num_part, &num) || !parse_big_int(den_part, &den)) {
      throw ValidationError("malformed rational '" + text + "'", path);
    }
    if (den == 0) {
      throw ValidationError("zero denominator in '" + text + "'", path);
    }
  }
  return Rat(num, den);
}

std::string format_rat(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

BigInt floor_rat(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);  // truncates toward zero
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

BigInt next_integer_above(const Rat& r) { return floor_rat(r) + 1; }

std::string rat_to_decimal(const Rat& r, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = r < 0;
  const Rat a = negative ? Rat(-r) : r;
  // round half up on the scaled value
  const BigInt scaled = floor_rat(a * scale * 2 + 1) / 2;
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string frac_str = frac.str();
  frac_str.insert(frac_str.begin(), digits - frac_str.size(), '0');
  while (!frac_str.empty() && frac_str.back() == '0') frac_str.pop_back();
  std::string out = (negative && (whole != 0 || !frac_str.empty())) ? "-" : "";
  out += whole.str();
  if (!frac_str.empty()) out += "." + frac_str;
  return out;
}

}  // namespace crosstopo
