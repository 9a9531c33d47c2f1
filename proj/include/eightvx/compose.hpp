#pragma once

#include <array>

#include "eightvx/enumerate.hpp"
#include "eightvx/graph.hpp"

namespace eightvx {

// Evaluation of a 4-ary construction as a virtual degree-4 node. value[p]
// is the internal defect-free mass with the dangling bits fixed to pattern
// p (bit i = label e(i+1)); params are read off the even patterns.
struct ComposedFunction {
  std::array<double, 16> value{};
  Params params{};
  double symmetry_err = 0.0;  // max |value[p] - value[~p]|
  double odd_mass = 0.0;      // max value over odd patterns (always 0)
};

// Throws Internal when arrow-reversal symmetry fails beyond tolerance,
// which indicates a bug rather than a property of any input.
ComposedFunction compose_construction(const Graph& g,
                                      const EnumOptions& opts = {});

// Removes two links and exposes their endpoints as dangling ports: the
// ends of link_a become e1,e2 and the ends of link_b become e3,e4. The
// composed params then split the closed instance's masses as
//   Z(Omega_0) = 2(b'+c')   and   mass of defects exactly at {a,b} = 2(a'+d').
Graph cut_open(const Graph& g, int link_a, int link_b);

}  // namespace eightvx
