#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace finsemi {

// Exact rational arithmetic for measures; int64 is plenty for the scales here
// (denominators stay below 2^20 on every code path).
using Rat = boost::rational<long long>;

// Subsets of a carrier of size <= 64, one bit per element index.
using Mask = std::uint64_t;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a requested computation exceeds a configured size bound.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rat_to_string(const Rat& r);
Rat parse_rat(const std::string& s);  // accepts "3/4" and "2"

std::string mask_to_string(Mask m);   // "{0,2,3}"
int popcount(Mask m);
int lowest_bit(Mask m);               // index of least set bit; m != 0

}  // namespace finsemi
