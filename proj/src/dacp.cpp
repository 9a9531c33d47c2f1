#include "eightvx/dacp.hpp"

#include <cmath>
#include <string>

namespace eightvx {

namespace {

std::vector<int> deg4_nodes(const Graph& g) {
  std::vector<int> out;
  for (int i = 0; i < int(g.nodes.size()); ++i)
    if (g.nodes[i].kind == NodeKind::Deg4) out.push_back(i);
  return out;
}

struct CircuitTrace {
  int circuits = 0;
  bool parity_ok = true;
};

// Pairings glue ports into circuits: inside a node the partner port
// continues the walk, across a link the opposite slot does. Passing a
// minus-signed node (or a Deg2Eq node) flips the walk direction, so a
// coherent circuit must see an even number of such passes.
CircuitTrace trace_circuits(const Graph& g, const GraphIndex& idx,
                            const std::vector<int>& d4,
                            const std::vector<SignedPairing>& family) {
  std::vector<int> pairing_at(g.nodes.size(), -1);
  std::vector<uint8_t> minus_at(g.nodes.size(), 0);
  for (size_t i = 0; i < d4.size(); ++i) {
    pairing_at[d4[i]] = int(family[i].pairing);
    minus_at[d4[i]] = family[i].sign == Sign::Minus;
  }
  for (int i = 0; i < int(g.nodes.size()); ++i)
    if (g.nodes[i].kind == NodeKind::Deg2Eq) minus_at[i] = 1;

  CircuitTrace out;
  std::vector<uint8_t> seen(idx.slot_count, 0);
  for (int s0 = 0; s0 < idx.slot_count; ++s0) {
    if (seen[s0]) continue;
    ++out.circuits;
    int minus_count = 0;
    int s = s0;
    do {
      seen[s] = 1;
      const int node = idx.node_of_slot(s, g);
      const int port = s - idx.slot_offset[node];
      minus_count += minus_at[node];
      int partner;
      if (g.nodes[node].kind == NodeKind::Deg4)
        partner = pair_partner(Pairing(pairing_at[node]), port);
      else
        partner = port ^ 1;
      const int s2 = idx.slot(node, partner);
      seen[s2] = 1;
      s = idx.opposite_slot(s2);
    } while (s != s0);
    if (minus_count % 2 != 0) out.parity_ok = false;
  }
  return out;
}

}  // namespace

NodeWeights solve_node_weights(const Graph& g) {
  NodeWeights out;
  for (const auto& nd : g.nodes) {
    if (nd.kind != NodeKind::Deg4) continue;
    WeightSolution sol = solve_weight_function(nd.params);
    if (!sol.ok)
      fail(ErrorCode::Region, "node " + std::to_string(nd.id) +
                                  " admits no nonnegative pairing weights");
    out.push_back(sol.w);
  }
  return out;
}

std::vector<DacpTerm> dacp_expand(const Graph& g, const Assignment& even_state,
                                  const NodeWeights& weights,
                                  const DacpOptions& opts) {
  const GraphIndex idx = make_index(g);
  if (!g.dangling.empty())
    fail(ErrorCode::Internal, "expansion requires a closed instance");
  if (!node_constraints_ok(g, idx, even_state) ||
      !defect_links(idx, even_state).empty())
    fail(ErrorCode::Internal, "expansion requires a defect-free state");
  const std::vector<int> d4 = deg4_nodes(g);
  if (weights.size() != d4.size())
    fail(ErrorCode::Internal, "one weight function per degree-4 node required");

  uint64_t n_terms = 1;
  for (size_t i = 0; i < d4.size(); ++i) {
    if (n_terms > opts.term_cap / 3)
      fail(ErrorCode::TooLarge, "3^deg4 terms exceed cap");
    n_terms *= 3;
  }

  std::vector<Sign> sign_of(d4.size() * 3);
  for (size_t i = 0; i < d4.size(); ++i) {
    const LocalPattern pat = node_pattern(g, idx, even_state, d4[i]);
    for (int p = 0; p < 3; ++p)
      sign_of[i * 3 + p] = pairing_sign(pat, Pairing(p));
  }

  std::vector<DacpTerm> terms;
  terms.reserve(n_terms);
  std::vector<SignedPairing> family(d4.size());
  for (uint64_t t = 0; t < n_terms; ++t) {
    uint64_t code = t;
    double w = 1.0;
    for (size_t i = 0; i < d4.size(); ++i) {
      const int p = int(code % 3);
      code /= 3;
      family[i] = SignedPairing{Pairing(p), sign_of[i * 3 + p]};
      w *= weights[i](family[i]);
    }
    DacpTerm term;
    term.pairings = family;
    term.weight = w;
    if (opts.trace_circuits) {
      const CircuitTrace tr = trace_circuits(g, idx, d4, family);
      term.circuits = tr.circuits;
      term.minus_parity_ok = tr.parity_ok;
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

std::array<double, 6> signed_pairing_mass(const Graph& g, int v,
                                          const NodeWeights& weights,
                                          const EnumOptions& opts) {
  const GraphIndex idx = make_index(g);
  const std::vector<int> d4 = deg4_nodes(g);
  if (weights.size() != d4.size())
    fail(ErrorCode::Internal, "one weight function per degree-4 node required");
  int vi = -1;
  for (size_t i = 0; i < d4.size(); ++i)
    if (d4[i] == v) vi = int(i);
  if (vi < 0) fail(ErrorCode::Internal, "pairing mass requires a degree-4 node");
  const WeightFunction& wv = weights[vi];

  // Grouping the expansion terms of a state by the pairing at v leaves
  // w(rho_v) times the product of the other nodes' pattern weights, i.e.
  // w(rho_v) * weight(state) / f_v(pattern at v).
  std::array<double, 6> mass{};
  for_each_state(
      g, 0,
      [&](const Assignment& a) {
        const LocalPattern pat = node_pattern(g, idx, a, v);
        const double fv = local_weight(g.nodes[v].params, pat);
        if (fv == 0.0) return;  // zero-weight state, all terms vanish
        const double rest = assignment_weight(g, idx, a) / fv;
        for (int p = 0; p < 3; ++p) {
          const SignedPairing sp = compatible_signed_pairing(pat, Pairing(p));
          mass[sp_index(sp)] += wv(sp) * rest;
        }
      },
      opts);
  return mass;
}

}  // namespace eightvx
