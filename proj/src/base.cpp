#include "finsemi/base.hpp"

#include <bit>

namespace finsemi {

std::string rat_to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("rational out of range '" + s + "'");
  }
}

std::string mask_to_string(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

int popcount(Mask m) { return std::popcount(m); }

int lowest_bit(Mask m) { return std::countr_zero(m); }

}  // namespace finsemi
