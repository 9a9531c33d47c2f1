#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "eightvx/error.hpp"
#include "eightvx/params.hpp"

namespace eightvx {

enum class NodeKind : uint8_t {
  Deg4,     // four ports, weighted even-pattern constraint
  Deg2Neq,  // two ports, bits must differ (one arrow in, one out)
  Deg2Eq,   // two ports, bits must agree (both in or both out)
};

inline int port_count(NodeKind k) { return k == NodeKind::Deg4 ? 4 : 2; }

struct Node {
  NodeKind kind = NodeKind::Deg4;
  Params params{};  // meaningful for Deg4 only
  int id = 0;       // external id; unique, drives the elimination order
};

struct PortRef {
  int node = -1;  // index into Graph::nodes
  int port = -1;  // 0-based
  bool operator==(const PortRef&) const = default;
};

// A link joins two ports and models the shared edge between them: in a
// defect-free state its two endpoint bits differ.
struct Link {
  PortRef a, b;
};

// Edge-port incidence structure. Degree-4 nodes carry the weighted
// constraint; degree-2 nodes are hard pass-through constraints created by
// vertex splits. `dangling[i]` is the port labeled e(i+1) of a 4-ary
// construction; closed instances have no dangling ports. The planar flag
// asserts that every node lists its ports in counterclockwise order of an
// embedding (and that dangling ports lie on the outer face in label order).
struct Graph {
  std::vector<Node> nodes;
  std::vector<Link> links;
  std::vector<PortRef> dangling;  // size 0 or 4
  bool planar = false;

  int deg4_count() const {
    int n = 0;
    for (const auto& nd : nodes) n += nd.kind == NodeKind::Deg4;
    return n;
  }
  int max_id() const {
    int m = -1;
    for (const auto& nd : nodes) m = nd.id > m ? nd.id : m;
    return m;
  }
};

struct Diagnostics {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  std::string joined() const {
    std::string s;
    for (const auto& i : issues) {
      if (!s.empty()) s += "; ";
      s += i;
    }
    return s;
  }
};

// Structural checks: every port used exactly once (by a link or a dangling
// label), dangling set empty or exactly e1..e4, ids unique.
Diagnostics validate_graph(const Graph& g);

// Flat port ("slot") numbering plus inverse lookups; built once per engine.
struct GraphIndex {
  std::vector<int> slot_offset;             // per node
  int slot_count = 0;
  std::vector<int> slot_link;               // slot -> link index or -1
  std::vector<int> slot_dangle;             // slot -> dangling label or -1
  std::vector<std::array<int, 2>> link_slots;

  int slot(int node, int port) const { return slot_offset[node] + port; }
  int node_of_slot(int s, const Graph& g) const {
    int lo = 0, hi = int(g.nodes.size()) - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (slot_offset[mid] <= s) lo = mid; else hi = mid - 1;
    }
    return lo;
  }
  int opposite_slot(int s) const {
    const auto& ls = link_slots[slot_link[s]];
    return ls[0] == s ? ls[1] : ls[0];
  }
};

// Throws Internal when the graph does not validate.
GraphIndex make_index(const Graph& g);

bool structurally_equal(const Graph& a, const Graph& b);

// Two degree-4 nodes joined by four parallel links (port i to port i).
Graph k24_graph(const Params& pu, const Params& pv);
inline Graph k24_graph(const Params& p) { return k24_graph(p, p); }

// A single cycle of degree-2 nodes (node i port 1 to node i+1 port 0).
// A one-node cycle is a node with its two ports linked together.
Graph cycle_graph(const std::vector<NodeKind>& kinds);

// Disjoint union; node ids of `b` are shifted above those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace eightvx
