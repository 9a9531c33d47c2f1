#include "eightvx/enumerate.hpp"

#include <string>

namespace eightvx {

namespace {

uint64_t choose(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  uint64_t r = 1;
  for (uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Visits all 2^L link-bit vectors with the given violated-link set. A
// satisfied link reads complementary bits at its endpoints, a violated one
// reads equal bits, so the two raw choices per link cover every state.
void scan_defect_set(const Graph& g, const GraphIndex& idx,
                     const std::vector<int>& defects,
                     const std::function<void(const Assignment&)>& visit) {
  const int L = int(g.links.size());
  std::vector<uint8_t> defective(L, 0);
  for (int d : defects) defective[d] = 1;
  Assignment asg;
  asg.bits.assign(idx.slot_count, 0);
  const uint64_t total = uint64_t(1) << L;
  for (uint64_t bitsv = 0; bitsv < total; ++bitsv) {
    for (int l = 0; l < L; ++l) {
      const uint8_t beta = (bitsv >> l) & 1;
      asg.bits[idx.link_slots[l][0]] = beta;
      asg.bits[idx.link_slots[l][1]] = defective[l] ? beta : uint8_t(1 - beta);
    }
    if (!node_constraints_ok(g, idx, asg)) continue;
    visit(asg);
  }
}

}  // namespace

void for_each_state(const Graph& g, int k,
                    const std::function<void(const Assignment&)>& visit,
                    const EnumOptions& opts) {
  if (k != 0 && k != 2 && k != 4)
    fail(ErrorCode::Internal, "stratum must be 0, 2 or 4");
  if (!g.dangling.empty())
    fail(ErrorCode::Internal, "enumeration requires a closed instance");
  const GraphIndex idx = make_index(g);
  const int L = int(g.links.size());
  if (L >= 60) fail(ErrorCode::TooLarge, "too many links to enumerate");
  const uint64_t per_set = uint64_t(1) << L;
  if (choose(uint64_t(L), uint64_t(k)) > opts.cap / per_set)
    fail(ErrorCode::TooLarge, "enumeration over " + std::to_string(L) +
                                  " links exceeds cap");
  if (k == 0) {
    scan_defect_set(g, idx, {}, visit);
    return;
  }
  // choose k violated links
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      scan_defect_set(g, idx, pick, visit);
      return;
    }
    for (int l = start; l <= L - (k - depth); ++l) {
      pick[depth] = l;
      rec(l + 1, depth + 1);
    }
  };
  rec(0, 0);
}

std::vector<Assignment> enumerate_stratum(const Graph& g, int k,
                                          const EnumOptions& opts) {
  std::vector<Assignment> out;
  for_each_state(g, k, [&](const Assignment& a) { out.push_back(a); }, opts);
  return out;
}

double stratum_mass(const Graph& g, int k, const EnumOptions& opts) {
  const GraphIndex idx = make_index(g);
  double mass = 0.0;
  for_each_state(
      g, k, [&](const Assignment& a) { mass += assignment_weight(g, idx, a); },
      opts);
  return mass;
}

double defect_pair_mass(const Graph& g, int link_a, int link_b,
                        const EnumOptions& opts) {
  if (link_a == link_b) fail(ErrorCode::Internal, "defect links must differ");
  if (!g.dangling.empty())
    fail(ErrorCode::Internal, "enumeration requires a closed instance");
  const GraphIndex idx = make_index(g);
  const int L = int(g.links.size());
  if (L >= 60 || (uint64_t(1) << L) > opts.cap)
    fail(ErrorCode::TooLarge, "enumeration exceeds cap");
  double mass = 0.0;
  scan_defect_set(g, idx, {link_a, link_b},
                  [&](const Assignment& a) { mass += assignment_weight(g, idx, a); });
  return mass;
}

}  // namespace eightvx
