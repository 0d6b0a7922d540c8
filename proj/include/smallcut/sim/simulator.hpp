#pragma once

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "smallcut/graph.hpp"
#include "smallcut/sim/protocol.hpp"
#include "smallcut/sim/store.hpp"

namespace smallcut {

// A violation of the synchronous message-passing model: over-budget payload,
// a message to a non-neighbor, two messages on one edge direction in one
// round, a non-leader acting before activation in single-initiator mode, or
// the round watchdog expiring.
struct SimFault : std::runtime_error {
  enum class Kind {
    kOverBudget,
    kNotNeighbor,
    kDuplicateEdge,
    kQuiescence,
    kMaxRounds,
    kPipelining,
  };
  SimFault(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

struct SimOptions {
  Vertex leader = 0;
  std::uint64_t seed = 1;
  // Per-message payload budget in bits. 0 = default: the larger of
  // 8*ceil(log2 n) and the protocol's declared minimum.
  int budget_bits = 0;
  // Watchdog; 0 = default 20*n + 200 rounds.
  int max_rounds = 0;
  bool record_trace = false;
  // If >= 0, snapshot this node's store after every round.
  Vertex probe = -1;
};

struct TraceEntry {
  int round;
  Vertex src;
  Vertex dst;
  BitVec payload;
};

struct SimResult {
  int rounds = 0;      // rounds executed (the leader's done round is included)
  int done_round = -1; // round in which the leader called set_done
  long long messages = 0;
  int max_payload_bits = 0;
  int budget_bits = 0;  // effective budget used for the run
  std::vector<Store> stores;
  std::vector<TraceEntry> trace;
  std::vector<Bytes> probe_snapshots;  // one per executed round
};

class Simulator {
 public:
  Simulator(const Graph& g, SimOptions opt);

  // Runs the protocol to leader-done (or faults). The second form starts
  // from preloaded stores, which is how multi-stage algorithms pass one
  // stage's results to the next.
  SimResult run(Protocol& p);
  SimResult run(Protocol& p, std::vector<Store> stores);

  const SimOptions& options() const { return opt_; }

 private:
  const Graph* g_;
  SimOptions opt_;
};

// Convenience: total metrics of a staged pipeline. Traces concatenate in
// stage order when recording is on.
struct StagedMetrics {
  int rounds = 0;
  long long messages = 0;
  int max_payload_bits = 0;
  std::vector<TraceEntry> trace;
  void add(SimResult& r) {
    rounds += r.rounds;
    messages += r.messages;
    if (r.max_payload_bits > max_payload_bits) max_payload_bits = r.max_payload_bits;
    if (!r.trace.empty())
      trace.insert(trace.end(), std::make_move_iterator(r.trace.begin()),
                   std::make_move_iterator(r.trace.end()));
  }
  void add(StagedMetrics& s) {
    rounds += s.rounds;
    messages += s.messages;
    if (s.max_payload_bits > max_payload_bits) max_payload_bits = s.max_payload_bits;
    if (!s.trace.empty())
      trace.insert(trace.end(), std::make_move_iterator(s.trace.begin()),
                   std::make_move_iterator(s.trace.end()));
  }
};

}  // namespace smallcut
