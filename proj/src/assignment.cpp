#include "eightvx/assignment.hpp"

namespace eightvx {

std::vector<int> defect_links(const GraphIndex& idx, const Assignment& asg) {
  std::vector<int> out;
  for (size_t li = 0; li < idx.link_slots.size(); ++li)
    if (link_defective(idx, asg, int(li))) out.push_back(int(li));
  return out;
}

bool node_constraints_ok(const Graph& g, const GraphIndex& idx,
                         const Assignment& asg) {
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const LocalPattern pat = node_pattern(g, idx, asg, int(i));
    switch (g.nodes[i].kind) {
      case NodeKind::Deg4:
        if (!even_pattern(pat)) return false;
        break;
      case NodeKind::Deg2Neq:
        if (pat != 0b01 && pat != 0b10) return false;
        break;
      case NodeKind::Deg2Eq:
        if (pat != 0b00 && pat != 0b11) return false;
        break;
    }
  }
  return true;
}

double assignment_weight(const Graph& g, const GraphIndex& idx,
                         const Assignment& asg) {
  double w = 1.0;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes[i].kind != NodeKind::Deg4) continue;
    w *= local_weight(g.nodes[i].params, node_pattern(g, idx, asg, int(i)));
  }
  return w;
}

uint64_t assignment_hash(const Assignment& asg) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (uint8_t b : asg.bits) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace eightvx
