#include "eightvx/compose.hpp"

#include <cmath>
#include <string>

namespace eightvx {

ComposedFunction compose_construction(const Graph& g, const EnumOptions& opts) {
  if (g.dangling.size() != 4)
    fail(ErrorCode::Internal, "composition requires dangling ports e1..e4");
  const GraphIndex idx = make_index(g);
  const int L = int(g.links.size());
  if (L >= 56 || (uint64_t(1) << L) > opts.cap / 16)
    fail(ErrorCode::TooLarge, "composition over " + std::to_string(L) +
                                  " links exceeds cap");

  std::array<int, 4> dangle_slot{};
  for (int i = 0; i < 4; ++i)
    dangle_slot[i] = idx.slot(g.dangling[i].node, g.dangling[i].port);

  ComposedFunction out;
  Assignment asg;
  asg.bits.assign(idx.slot_count, 0);
  const uint64_t total = uint64_t(1) << L;
  for (int pat = 0; pat < 16; ++pat) {
    for (int i = 0; i < 4; ++i)
      asg.bits[dangle_slot[i]] = uint8_t((pat >> i) & 1);
    double mass = 0.0;
    for (uint64_t bitsv = 0; bitsv < total; ++bitsv) {
      for (int l = 0; l < L; ++l) {
        const uint8_t beta = (bitsv >> l) & 1;
        asg.bits[idx.link_slots[l][0]] = beta;
        asg.bits[idx.link_slots[l][1]] = uint8_t(1 - beta);
      }
      if (!node_constraints_ok(g, idx, asg)) continue;
      mass += assignment_weight(g, idx, asg);
    }
    out.value[pat] = mass;
  }

  double scale = 0.0;
  for (double v : out.value) scale = std::max(scale, std::fabs(v));
  for (int pat = 0; pat < 16; ++pat) {
    const int comp = ~pat & 0xf;
    out.symmetry_err =
        std::max(out.symmetry_err, std::fabs(out.value[pat] - out.value[comp]));
    if (!even_pattern(LocalPattern(pat)))
      out.odd_mass = std::max(out.odd_mass, std::fabs(out.value[pat]));
  }
  if (out.symmetry_err > 1e-9 * std::max(1.0, scale) || out.odd_mass != 0.0)
    fail(ErrorCode::Internal, "composed function breaks reversal symmetry");

  out.params.a = out.value[pattern_of("0011")];
  out.params.b = out.value[pattern_of("0110")];
  out.params.c = out.value[pattern_of("0101")];
  out.params.d = out.value[pattern_of("0000")];
  return out;
}

Graph cut_open(const Graph& g, int link_a, int link_b) {
  if (!g.dangling.empty())
    fail(ErrorCode::Internal, "cut_open expects a closed instance");
  if (link_a == link_b || link_a < 0 || link_b < 0 ||
      link_a >= int(g.links.size()) || link_b >= int(g.links.size()))
    fail(ErrorCode::Internal, "cut_open needs two distinct links");
  Graph out = g;
  const Link la = g.links[link_a];
  const Link lb = g.links[link_b];
  out.links.clear();
  for (int l = 0; l < int(g.links.size()); ++l)
    if (l != link_a && l != link_b) out.links.push_back(g.links[l]);
  out.dangling = {la.a, la.b, lb.a, lb.b};
  out.planar = false;  // no claim about the cut embedding
  return out;
}

}  // namespace eightvx
