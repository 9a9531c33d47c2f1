#include "eightvx/graph.hpp"

#include <algorithm>
#include <set>

namespace eightvx {

Diagnostics validate_graph(const Graph& g) {
  Diagnostics diag;
  const int n = int(g.nodes.size());

  std::set<int> ids;
  for (const auto& nd : g.nodes) {
    if (!ids.insert(nd.id).second)
      diag.issues.push_back("DuplicateNodeId: " + std::to_string(nd.id));
    if (nd.kind == NodeKind::Deg4 && !nd.params.valid())
      diag.issues.push_back("BadParams: node " + std::to_string(nd.id));
  }

  // usage[slot] = number of links/danglings touching that port
  std::vector<int> offsets(n + 1, 0);
  for (int i = 0; i < n; ++i)
    offsets[i + 1] = offsets[i] + port_count(g.nodes[i].kind);
  std::vector<int> usage(offsets[n], 0);

  auto check_ref = [&](const PortRef& r, const char* what) -> bool {
    if (r.node < 0 || r.node >= n) {
      diag.issues.push_back(std::string("BadNodeRef: ") + what);
      return false;
    }
    if (r.port < 0 || r.port >= port_count(g.nodes[r.node].kind)) {
      diag.issues.push_back(std::string("BadPortRef: ") + what + " node " +
                            std::to_string(g.nodes[r.node].id));
      return false;
    }
    return true;
  };

  for (size_t li = 0; li < g.links.size(); ++li) {
    const Link& l = g.links[li];
    bool ok = check_ref(l.a, "link") && check_ref(l.b, "link");
    if (!ok) continue;
    if (l.a == l.b) {
      diag.issues.push_back("SelfPort: link " + std::to_string(li));
      continue;
    }
    usage[offsets[l.a.node] + l.a.port] += 1;
    usage[offsets[l.b.node] + l.b.port] += 1;
  }

  if (!g.dangling.empty() && g.dangling.size() != 4)
    diag.issues.push_back("BadDanglingSet: expected 0 or 4 labels, got " +
                          std::to_string(g.dangling.size()));
  for (const auto& r : g.dangling) {
    if (!check_ref(r, "dangling")) continue;
    usage[offsets[r.node] + r.port] += 1;
  }

  for (int i = 0; i < n; ++i) {
    const int np = port_count(g.nodes[i].kind);
    for (int p = 0; p < np; ++p) {
      const int u = usage[offsets[i] + p];
      if (u == 0)
        diag.issues.push_back("UnmatchedPort: node " +
                              std::to_string(g.nodes[i].id) + " port " +
                              std::to_string(p + 1));
      else if (u > 1)
        diag.issues.push_back("PortReused: node " +
                              std::to_string(g.nodes[i].id) + " port " +
                              std::to_string(p + 1));
    }
  }
  return diag;
}

GraphIndex make_index(const Graph& g) {
  Diagnostics diag = validate_graph(g);
  if (!diag.ok()) fail(ErrorCode::Internal, "invalid graph: " + diag.joined());
  GraphIndex idx;
  const int n = int(g.nodes.size());
  idx.slot_offset.resize(n);
  int off = 0;
  for (int i = 0; i < n; ++i) {
    idx.slot_offset[i] = off;
    off += port_count(g.nodes[i].kind);
  }
  idx.slot_count = off;
  idx.slot_link.assign(off, -1);
  idx.slot_dangle.assign(off, -1);
  idx.link_slots.resize(g.links.size());
  for (size_t li = 0; li < g.links.size(); ++li) {
    const Link& l = g.links[li];
    const int sa = idx.slot(l.a.node, l.a.port);
    const int sb = idx.slot(l.b.node, l.b.port);
    idx.slot_link[sa] = int(li);
    idx.slot_link[sb] = int(li);
    idx.link_slots[li] = {sa, sb};
  }
  for (size_t di = 0; di < g.dangling.size(); ++di) {
    const PortRef& r = g.dangling[di];
    idx.slot_dangle[idx.slot(r.node, r.port)] = int(di);
  }
  return idx;
}

bool structurally_equal(const Graph& a, const Graph& b) {
  if (a.planar != b.planar) return false;
  if (a.nodes.size() != b.nodes.size() || a.links.size() != b.links.size() ||
      a.dangling.size() != b.dangling.size())
    return false;
  for (size_t i = 0; i < a.nodes.size(); ++i) {
    const Node& x = a.nodes[i];
    const Node& y = b.nodes[i];
    if (x.kind != y.kind || x.id != y.id) return false;
    if (x.kind == NodeKind::Deg4 &&
        (x.params.a != y.params.a || x.params.b != y.params.b ||
         x.params.c != y.params.c || x.params.d != y.params.d))
      return false;
  }
  auto norm_link = [](const Link& l) {
    Link out = l;
    if (out.b.node < out.a.node ||
        (out.b.node == out.a.node && out.b.port < out.a.port))
      std::swap(out.a, out.b);
    return out;
  };
  auto key = [&](const Link& l) {
    Link m = norm_link(l);
    return std::array<int, 4>{m.a.node, m.a.port, m.b.node, m.b.port};
  };
  std::vector<std::array<int, 4>> ka, kb;
  for (const auto& l : a.links) ka.push_back(key(l));
  for (const auto& l : b.links) kb.push_back(key(l));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return false;
  for (size_t i = 0; i < a.dangling.size(); ++i)
    if (!(a.dangling[i] == b.dangling[i])) return false;
  return true;
}

Graph k24_graph(const Params& pu, const Params& pv) {
  Graph g;
  g.nodes.push_back(Node{NodeKind::Deg4, pu, 0});
  g.nodes.push_back(Node{NodeKind::Deg4, pv, 1});
  for (int p = 0; p < 4; ++p) g.links.push_back(Link{{0, p}, {1, p}});
  return g;
}

Graph cycle_graph(const std::vector<NodeKind>& kinds) {
  Graph g;
  const int m = int(kinds.size());
  for (int i = 0; i < m; ++i) {
    if (kinds[i] == NodeKind::Deg4)
      fail(ErrorCode::Internal, "cycle_graph expects degree-2 kinds");
    g.nodes.push_back(Node{kinds[i], Params{}, i});
  }
  if (m == 1) {
    g.links.push_back(Link{{0, 0}, {0, 1}});
    return g;
  }
  for (int i = 0; i < m; ++i) g.links.push_back(Link{{i, 1}, {(i + 1) % m, 0}});
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g = a;
  const int shift = int(a.nodes.size());
  const int id_shift = a.max_id() + 1;
  for (const auto& nd : b.nodes) {
    Node copy = nd;
    copy.id += id_shift;
    g.nodes.push_back(copy);
  }
  for (const auto& l : b.links)
    g.links.push_back(Link{{l.a.node + shift, l.a.port},
                           {l.b.node + shift, l.b.port}});
  if (!b.dangling.empty()) {
    if (!a.dangling.empty())
      fail(ErrorCode::Internal, "union of two dangling constructions");
    for (const auto& r : b.dangling)
      g.dangling.push_back(PortRef{r.node + shift, r.port});
  }
  g.planar = a.planar && b.planar;
  return g;
}

}  // namespace eightvx
