#include "eightvx/chain.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace eightvx {

namespace {

std::array<double, 16> weight_table(const Node& nd) {
  std::array<double, 16> t{};
  if (nd.kind == NodeKind::Deg4)
    for (int pat = 0; pat < 16; ++pat)
      t[pat] = local_weight(nd.params, LocalPattern(pat));
  return t;
}

}  // namespace

ChainState make_state(const Graph& g, const Assignment& asg) {
  const GraphIndex idx = make_index(g);
  if (!g.dangling.empty())
    fail(ErrorCode::Internal, "walk requires a closed instance");
  if (int(asg.bits.size()) != idx.slot_count)
    fail(ErrorCode::Internal, "assignment size mismatch");
  if (!node_constraints_ok(g, idx, asg))
    fail(ErrorCode::Internal, "assignment violates a node constraint");
  ChainState s;
  s.asg = asg;
  const std::vector<int> defects = defect_links(idx, asg);
  if (defects.size() != 0 && defects.size() != 2)
    fail(ErrorCode::Internal, "state must have 0 or 2 violated links");
  s.stratum = int(defects.size());
  s.defects = {-1, -1};
  for (size_t i = 0; i < defects.size(); ++i) s.defects[i] = defects[i];
  s.weight = assignment_weight(g, idx, asg);
  if (s.weight <= 0.0)
    fail(ErrorCode::ZeroWeightState, "state carries zero weight");
  return s;
}

Chain::Chain(const Graph& g, ChainState init, ChainOptions opts)
    : g_(&g), idx_(make_index(g)), state_(std::move(init)), opts_(opts) {
  if (!g.dangling.empty())
    fail(ErrorCode::Internal, "walk requires a closed instance");
  for (int n = 0; n < int(g.nodes.size()); ++n) {
    const int np = port_count(g.nodes[n].kind);
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j)
        if (i != j) proposals_.push_back(Proposal{n, i, j});
    pattern_.push_back(node_pattern(g, idx_, state_.asg, n));
    wtab_.push_back(weight_table(g.nodes[n]));
  }
  if (state_.weight <= 0.0)
    fail(ErrorCode::ZeroWeightState, "start state carries zero weight");
}

double Chain::node_weight_ratio(int node, int pi, int pj) const {
  if ((*g_).nodes[node].kind != NodeKind::Deg4) return 1.0;
  const LocalPattern oldp = pattern_[node];
  const LocalPattern newp = LocalPattern(oldp ^ (1u << pi) ^ (1u << pj));
  return wtab_[node][newp] / wtab_[node][oldp];
}

void Chain::refresh_weight() {
  state_.weight = assignment_weight(*g_, idx_, state_.asg);
  steps_since_refresh_ = 0;
}

Move Chain::step(Rng& rng) {
  if (++steps_since_refresh_ >= opts_.recompute_interval) refresh_weight();
  const Proposal& pr = proposals_[rng.below(proposals_.size())];
  Move mv;
  mv.node = pr.node;
  mv.port_i = pr.port_i;
  mv.port_j = pr.port_j;
  if (pr.port_i > pr.port_j) return mv;  // ordered duplicate -> hold

  const int si = idx_.slot(pr.node, pr.port_i);
  const int sj = idx_.slot(pr.node, pr.port_j);
  const int li = idx_.slot_link[si];
  const int lj = idx_.slot_link[sj];
  if (li == lj) return mv;  // both ports on one link -> hold

  const bool di = li == state_.defects[0] || li == state_.defects[1];
  const bool dj = lj == state_.defects[0] || lj == state_.defects[1];
  if (!di && !dj) {
    if (state_.stratum != 0) return mv;  // would create a third defect
    mv.kind = MoveKind::Create;
  } else if (di && dj) {
    mv.kind = MoveKind::Merge;
  } else {
    mv.kind = MoveKind::Shift;
  }

  const double ratio = node_weight_ratio(pr.node, pr.port_i, pr.port_j);
  if (ratio < 1.0 && rng.uniform() >= ratio) return mv;

  mv.accepted = true;
  state_.asg.bits[si] ^= 1;
  state_.asg.bits[sj] ^= 1;
  pattern_[pr.node] =
      LocalPattern(pattern_[pr.node] ^ (1u << pr.port_i) ^ (1u << pr.port_j));
  state_.weight *= ratio;
  switch (mv.kind) {
    case MoveKind::Create:
      state_.defects = {std::min(li, lj), std::max(li, lj)};
      state_.stratum = 2;
      break;
    case MoveKind::Merge:
      state_.defects = {-1, -1};
      state_.stratum = 0;
      break;
    case MoveKind::Shift: {
      const int fixed = di ? li : lj;     // defect repaired here
      const int broken = di ? lj : li;    // fresh defect here
      const int keep = state_.defects[0] == fixed ? state_.defects[1]
                                                  : state_.defects[0];
      state_.defects = {std::min(keep, broken), std::max(keep, broken)};
      break;
    }
    case MoveKind::Hold:
      break;
  }
  return mv;
}

void Chain::run(uint64_t steps, Rng& rng) {
  for (uint64_t i = 0; i < steps; ++i) step(rng);
}

std::vector<std::pair<ChainState, Move>> neighbors(const Graph& g,
                                                   const ChainState& s) {
  const GraphIndex idx = make_index(g);
  std::vector<std::pair<ChainState, Move>> out;
  for (int n = 0; n < int(g.nodes.size()); ++n) {
    const int np = port_count(g.nodes[n].kind);
    for (int i = 0; i < np; ++i) {
      for (int j = i + 1; j < np; ++j) {
        const int si = idx.slot(n, i);
        const int sj = idx.slot(n, j);
        const int li = idx.slot_link[si];
        const int lj = idx.slot_link[sj];
        if (li == lj) continue;
        const bool di = li == s.defects[0] || li == s.defects[1];
        const bool dj = lj == s.defects[0] || lj == s.defects[1];
        Move mv;
        mv.node = n;
        mv.port_i = i;
        mv.port_j = j;
        if (!di && !dj) {
          if (s.stratum != 0) continue;
          mv.kind = MoveKind::Create;
        } else if (di && dj) {
          mv.kind = MoveKind::Merge;
        } else {
          mv.kind = MoveKind::Shift;
        }
        Assignment asg = s.asg;
        asg.bits[si] ^= 1;
        asg.bits[sj] ^= 1;
        // zero-weight targets are not states of the walk
        ChainState target;
        bool ok = true;
        try {
          target = make_state(g, asg);
        } catch (const Error&) {
          ok = false;
        }
        if (!ok) continue;
        mv.accepted = true;
        out.emplace_back(std::move(target), mv);
      }
    }
  }
  return out;
}

std::optional<Assignment> find_even_state(const Graph& g) {
  const GraphIndex idx = make_index(g);
  if (!g.dangling.empty())
    fail(ErrorCode::Internal, "search requires a closed instance");
  const int L = int(g.links.size());
  const int N = int(g.nodes.size());

  // assign link bits in order; check each node once its last port fills
  std::vector<int> remaining(N);
  for (int n = 0; n < N; ++n) remaining[n] = port_count(g.nodes[n].kind);
  std::vector<std::array<int, 2>> link_nodes(L);
  for (int l = 0; l < L; ++l)
    link_nodes[l] = {g.links[l].a.node, g.links[l].b.node};

  Assignment asg;
  asg.bits.assign(idx.slot_count, 0);

  auto node_ok = [&](int n) {
    const LocalPattern pat = node_pattern(g, idx, asg, n);
    switch (g.nodes[n].kind) {
      case NodeKind::Deg4:
        return local_weight(g.nodes[n].params, pat) > 0.0;
      case NodeKind::Deg2Neq:
        return pat == 0b01 || pat == 0b10;
      case NodeKind::Deg2Eq:
        return pat == 0b00 || pat == 0b11;
    }
    return false;
  };

  std::function<bool(int)> rec = [&](int l) -> bool {
    if (l == L) return true;
    for (int beta = 0; beta < 2; ++beta) {
      asg.bits[idx.link_slots[l][0]] = uint8_t(beta);
      asg.bits[idx.link_slots[l][1]] = uint8_t(1 - beta);
      bool ok = true;
      for (int side = 0; side < 2; ++side) {
        const int n = link_nodes[l][side];
        remaining[n] -= 1;
        if (remaining[n] == 0 && !node_ok(n)) ok = false;
      }
      if (ok && rec(l + 1)) return true;
      for (int side = 0; side < 2; ++side) remaining[link_nodes[l][side]] += 1;
    }
    return false;
  };
  if (L == 0) {
    if (N == 0) return asg;
    return std::nullopt;
  }
  if (!rec(0)) return std::nullopt;
  return asg;
}

EvenSampler::EvenSampler(const Graph& g, Rng rng, SamplerOptions opts)
    : chain_(g,
             [&]() {
               auto start = find_even_state(g);
               if (!start)
                 fail(ErrorCode::Infeasible,
                      "no defect-free positive-weight state exists");
               return make_state(g, *start);
             }()),
      rng_(rng),
      batch_(opts.batch),
      budget_(opts.batch_budget) {
  const uint64_t L = g.links.size();
  if (batch_ == 0) batch_ = std::max<uint64_t>(1, L);
  uint64_t burnin = opts.burnin;
  if (burnin == 0)
    burnin = uint64_t(chain_.proposal_slots()) * std::max<uint64_t>(1, L * L);
  chain_.run(burnin, rng_);
}

const Assignment& EvenSampler::draw() {
  chain_.run(batch_, rng_);
  uint64_t tries = 0;
  while (chain_.state().stratum != 0) {
    if (++tries > budget_)
      fail(ErrorCode::BudgetExhausted, "walk failed to revisit the defect-free stratum");
    chain_.run(batch_, rng_);
  }
  return chain_.state().asg;
}

ChainState run_chain(const Graph& g, const ChainState& init, uint64_t steps,
                     Rng& rng, uint64_t thin, std::vector<TraceRow>* trace) {
  Chain chain(g, init);
  for (uint64_t s = 0; s < steps; ++s) {
    if (trace && thin > 0 && s % thin == 0)
      trace->push_back(TraceRow{s, chain.state().stratum, chain.state().weight,
                                assignment_hash(chain.state().asg)});
    chain.step(rng);
  }
  return chain.state();
}

Assignment sample_even(const Graph& g, Rng& rng, SamplerOptions opts) {
  // child stream keeps repeated calls on one rng independent
  EvenSampler sampler(g, Rng(rng.next_u64()), opts);
  return sampler.draw();
}

}  // namespace eightvx
