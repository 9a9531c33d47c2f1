#pragma once

#include <cmath>
#include <cstdint>

#include "eightvx/error.hpp"

namespace eightvx {

// Local configuration weights of the four orientation classes at a degree-4
// node. The class of a pattern is determined by which ports carry inward
// arrows; arrow reversal maps a pattern to its complement with equal weight.
struct Params {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double sum() const { return a + b + c + d; }
  bool valid() const {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
           std::isfinite(d) && a >= 0 && b >= 0 && c >= 0 && d >= 0;
  }
  bool degenerate() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  int positive_count() const {
    return (a > 0) + (b > 0) + (c > 0) + (d > 0);
  }
};

// One bit per port, bit i set = the arrow points into the node along
// port i (ports 0..3, LSB = port 0).
using LocalPattern = uint8_t;

inline bool even_pattern(LocalPattern pat) {
  int ones = __builtin_popcount(unsigned(pat) & 0xf);
  return (ones % 2) == 0;
}

inline LocalPattern complement_pattern(LocalPattern pat) {
  return LocalPattern(~pat & 0xf);
}

enum class WeightClass : uint8_t { A, B, C, D, Odd };

// Pattern classes: {0011,1100} -> a, {0110,1001} -> b, {0101,1010} -> c,
// {0000,1111} -> d (pattern strings written port 1 first).
inline WeightClass weight_class(LocalPattern pat) {
  switch (pat & 0xf) {
    case 0b1100: case 0b0011: return WeightClass::A;
    case 0b0110: case 0b1001: return WeightClass::B;
    case 0b1010: case 0b0101: return WeightClass::C;
    case 0b0000: case 0b1111: return WeightClass::D;
    default: return WeightClass::Odd;
  }
}

inline double local_weight(const Params& p, LocalPattern pat) {
  switch (weight_class(pat)) {
    case WeightClass::A: return p.a;
    case WeightClass::B: return p.b;
    case WeightClass::C: return p.c;
    case WeightClass::D: return p.d;
    case WeightClass::Odd: return 0.0;
  }
  return 0.0;
}

// Builds a pattern from a "b1b2b3b4" string; test/CLI convenience.
inline LocalPattern pattern_of(const char* bits) {
  LocalPattern pat = 0;
  for (int i = 0; i < 4; ++i) {
    if (bits[i] != '0' && bits[i] != '1') fail(ErrorCode::Parse, "bad pattern string");
    if (bits[i] == '1') pat |= LocalPattern(1u << i);
  }
  return pat;
}

// Membership in the parameter regions that gate the algorithms. Membership
// tests are the literal inequalities; f_gt additionally requires at least
// two positive components.
struct RegionFlags {
  bool a_le = false;   // a + d <= b + c
  bool b_le = false;   // b + d <= a + c
  bool c_le = false;   // c + d <= a + b
  bool c_ge = false;   // c + d >= a + b
  bool c_eq = false;   // c + d == a + b
  bool f_le2 = false;  // every squared weight <= sum of the other three squares
  bool f_gt = false;   // some weight > sum of the other three, >= 2 positive
};

inline RegionFlags region_classify(const Params& p) {
  RegionFlags f;
  f.a_le = p.a + p.d <= p.b + p.c;
  f.b_le = p.b + p.d <= p.a + p.c;
  f.c_le = p.c + p.d <= p.a + p.b;
  f.c_ge = p.c + p.d >= p.a + p.b;
  f.c_eq = f.c_le && f.c_ge;
  const double a2 = p.a * p.a, b2 = p.b * p.b, c2 = p.c * p.c, d2 = p.d * p.d;
  f.f_le2 = a2 <= b2 + c2 + d2 && b2 <= a2 + c2 + d2 && c2 <= a2 + b2 + d2 &&
            d2 <= a2 + b2 + c2;
  const bool dominant = p.a > p.b + p.c + p.d || p.b > p.a + p.c + p.d ||
                        p.c > p.a + p.b + p.d || p.d > p.a + p.b + p.c;
  f.f_gt = dominant && p.positive_count() >= 2;
  return f;
}

}  // namespace eightvx
