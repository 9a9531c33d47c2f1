#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eightvx/assignment.hpp"
#include "eightvx/enumerate.hpp"
#include "eightvx/graph.hpp"
#include "eightvx/pairing.hpp"
#include "eightvx/weights.hpp"

namespace eightvx {

// One term of the signed-pairing expansion of a defect-free state: a choice
// of pairing at every degree-4 node, with the sign forced by the state's
// local pattern. Summing term weights over all 3^{#Deg4} choices recovers
// the state's configuration weight.
struct DacpTerm {
  std::vector<SignedPairing> pairings;  // per Deg4 node, in node order
  double weight = 0.0;
  int circuits = 0;
  bool minus_parity_ok = false;  // every traced circuit sees an even # of minus
};

struct DacpOptions {
  uint64_t term_cap = uint64_t(1) << 20;
  bool trace_circuits = true;
};

// Per-Deg4-node weight functions, in Deg4 node order.
using NodeWeights = std::vector<WeightFunction>;

// Solves the weight equations at every Deg4 node; throws Region when some
// node admits no nonnegative solution.
NodeWeights solve_node_weights(const Graph& g);

std::vector<DacpTerm> dacp_expand(const Graph& g, const Assignment& even_state,
                                  const NodeWeights& weights,
                                  const DacpOptions& opts = {});

// Splits the full expansion mass of the defect-free stratum by the signed
// pairing occurring at Deg4 node v; entries indexed by sp_index. The six
// values sum to the partition value.
std::array<double, 6> signed_pairing_mass(const Graph& g, int v,
                                          const NodeWeights& weights,
                                          const EnumOptions& opts = {});

}  // namespace eightvx
