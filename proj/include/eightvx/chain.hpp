#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "eightvx/assignment.hpp"
#include "eightvx/graph.hpp"
#include "eightvx/rng.hpp"

namespace eightvx {

enum class MoveKind : uint8_t { Hold, Create, Merge, Shift };

struct Move {
  MoveKind kind = MoveKind::Hold;
  int node = -1;
  int port_i = -1;
  int port_j = -1;
  bool accepted = false;
};

struct ChainState {
  Assignment asg;
  int stratum = 0;                    // 0 or 2 violated links
  std::array<int, 2> defects{-1, -1}; // violated link ids, -1 padded
  double weight = 1.0;
};

// Computes the cached fields; throws on states outside the walk's space or
// with zero weight.
ChainState make_state(const Graph& g, const Assignment& asg);

struct ChainOptions {
  uint64_t recompute_interval = uint64_t(1) << 16;  // full weight refresh
};

// Single-site Metropolis walk over defect-free and two-defect states. A
// proposal picks one of M = sum_u deg(u)(deg(u)-1) ordered port pairs at a
// node uniformly; pairs with port_i > port_j and pairs that would leave the
// state space map to "hold", so each neighbor is proposed with probability
// exactly 1/M. On a 4-regular instance M = 12n. Flipping a pair of ports
// at one node preserves its parity; the acceptance ratio is the single
// touched node's weight ratio.
class Chain {
 public:
  Chain(const Graph& g, ChainState init, ChainOptions opts = {});

  const ChainState& state() const { return state_; }
  const Graph& graph() const { return *g_; }
  int proposal_slots() const { return int(proposals_.size()); }

  Move step(Rng& rng);
  void run(uint64_t steps, Rng& rng);

 private:
  struct Proposal {
    int node;
    int port_i, port_j;
  };
  double node_weight_ratio(int node, int pi, int pj) const;
  void refresh_weight();

  const Graph* g_;
  GraphIndex idx_;
  ChainState state_;
  ChainOptions opts_;
  std::vector<Proposal> proposals_;
  std::vector<uint8_t> pattern_;          // cached per node
  std::vector<std::array<double, 16>> wtab_;  // per node (deg4 rows used)
  uint64_t steps_since_refresh_ = 0;
};

// All states one accepted move away, with the move that reaches each.
std::vector<std::pair<ChainState, Move>> neighbors(const Graph& g,
                                                   const ChainState& s);

// Deterministic backtracking search for a defect-free, positive-weight
// assignment; nullopt when none exists.
std::optional<Assignment> find_even_state(const Graph& g);

struct SamplerOptions {
  uint64_t burnin = 0;        // 0 = M * links^2
  uint64_t batch = 0;         // 0 = max(1, links)
  uint64_t batch_budget = 1u << 20;  // batches per draw before giving up
};

// Burns in once, then serves defect-free states with at least one batch of
// steps between draws.
class EvenSampler {
 public:
  EvenSampler(const Graph& g, Rng rng, SamplerOptions opts = {});
  const Assignment& draw();
  const Chain& chain() const { return chain_; }

 private:
  Chain chain_;
  Rng rng_;
  uint64_t batch_;
  uint64_t budget_;
};

struct TraceRow {
  uint64_t step;
  int stratum;
  double weight;
  uint64_t state_hash;
};

// Runs `steps` Metropolis steps from init; with thin > 0 records a row
// every `thin` steps (starting at step 0).
ChainState run_chain(const Graph& g, const ChainState& init, uint64_t steps,
                     Rng& rng, uint64_t thin = 0,
                     std::vector<TraceRow>* trace = nullptr);

// Draws one defect-free state: canonical start, burn-in, then batches until
// the walk visits the defect-free stratum.
Assignment sample_even(const Graph& g, Rng& rng, SamplerOptions opts = {});

}  // namespace eightvx
