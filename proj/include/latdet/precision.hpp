#pragma once

#include <stdexcept>
#include <string>

namespace latdet {

// Floating arm selection for the large product formulas. standard is plain
// double with compensated summation; extended uses a wider accumulator
// (__float128 where the toolchain has one, long double otherwise).
enum class Precision { standard, extended };

inline Precision precision_from_name(const std::string& name) {
  if (name == "standard") return Precision::standard;
  if (name == "extended") return Precision::extended;
  throw std::invalid_argument("precision must be 'standard' or 'extended', got '" + name + "'");
}

// Reads LATDET_PRECISION; unset means standard.
Precision precision_from_env();

}  // namespace latdet
