#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "eightvx/assignment.hpp"
#include "eightvx/graph.hpp"

namespace eightvx {

struct EnumOptions {
  // Upper bound on raw patterns visited (defect sets times link-bit
  // vectors); exceeding it raises TooLarge.
  uint64_t cap = uint64_t(1) << 30;
};

// Visits every assignment with exactly k violated links once (k in
// {0,2,4}), skipping assignments that break a node constraint. The visited
// Assignment reference is reused between calls; copy to keep.
void for_each_state(const Graph& g, int k,
                    const std::function<void(const Assignment&)>& visit,
                    const EnumOptions& opts = {});

std::vector<Assignment> enumerate_stratum(const Graph& g, int k,
                                          const EnumOptions& opts = {});

// Weighted mass of the stratum; k = 0 is the partition value.
double stratum_mass(const Graph& g, int k, const EnumOptions& opts = {});

inline double exact_partition(const Graph& g, const EnumOptions& opts = {}) {
  return stratum_mass(g, 0, opts);
}

// Mass of the two-defect states whose violated links are exactly
// {link_a, link_b}.
double defect_pair_mass(const Graph& g, int link_a, int link_b,
                        const EnumOptions& opts = {});

}  // namespace eightvx
