#pragma once

#include <cstdint>
#include <vector>

#include "eightvx/graph.hpp"
#include "eightvx/params.hpp"

namespace eightvx {

// One bit per port slot. A link is violated ("defective") when its two
// endpoint bits agree; strata are labeled by the number of violated links.
struct Assignment {
  std::vector<uint8_t> bits;

  bool operator==(const Assignment&) const = default;
};

inline LocalPattern node_pattern(const Graph& g, const GraphIndex& idx,
                                 const Assignment& asg, int node) {
  const int base = idx.slot_offset[node];
  const int np = port_count(g.nodes[node].kind);
  LocalPattern pat = 0;
  for (int p = 0; p < np; ++p)
    if (asg.bits[base + p]) pat |= LocalPattern(1u << p);
  return pat;
}

inline bool link_defective(const GraphIndex& idx, const Assignment& asg,
                           int link) {
  const auto& ls = idx.link_slots[link];
  return asg.bits[ls[0]] == asg.bits[ls[1]];
}

std::vector<int> defect_links(const GraphIndex& idx, const Assignment& asg);

// True when every Deg4 pattern is even and every degree-2 node constraint
// holds; such assignments are the only ones the engines ever store.
bool node_constraints_ok(const Graph& g, const GraphIndex& idx,
                         const Assignment& asg);

// Product of degree-4 local weights (degree-2 nodes contribute factor 1).
double assignment_weight(const Graph& g, const GraphIndex& idx,
                         const Assignment& asg);

// FNV-1a over the bit vector; stable across runs for trace emission.
uint64_t assignment_hash(const Assignment& asg);

}  // namespace eightvx
