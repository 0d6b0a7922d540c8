#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smallcut/bits.hpp"
#include "smallcut/graph.hpp"
#include "smallcut/prng.hpp"
#include "smallcut/sim/store.hpp"

namespace smallcut {

struct Message {
  Vertex src = -1;
  Vertex dst = -1;
  BitVec payload;
};

// Everything a node may consult during one round: its id, the round number,
// public parameters (n and the shared edge numbering restricted to incident
// edges), its private store and random stream, and the messages delivered
// this round. Sends are queued via send(); the simulator validates them.
class NodeCtx {
 public:
  Vertex id = -1;
  int round = 0;
  int n = 0;
  Vertex leader = 0;
  const std::vector<Adjacency>* adj = nullptr;  // incident edges, fixed order
  StoreRef store;
  Prng* rng = nullptr;
  const std::vector<Message>* inbox = nullptr;  // sorted by src

  NodeCtx(Store& s) : store(s) {}
  NodeCtx(StoreRef s) : store(std::move(s)) {}

  int degree() const { return static_cast<int>(adj->size()); }
  const std::vector<Message>& in() const { return *inbox; }

  void send(Vertex to, const BitVec& payload) { outbox.push_back({id, to, payload}); }
  void set_done() { done_request = true; }  // honored only at the leader

  std::vector<Message> outbox;
  bool done_request = false;
};

class Protocol {
 public:
  virtual ~Protocol() = default;
  virtual std::string name() const = 0;
  virtual void step(NodeCtx& ctx) = 0;

  // Single-initiator protocols promise that only the leader acts before
  // receiving a message; the simulator enforces the promise (quiescence).
  virtual bool single_initiator() const { return true; }

  // Largest number of messages the protocol ever sends over one edge in one
  // direction across a whole run (the pipelining constant); <0 = unbounded.
  virtual int max_messages_per_edge() const { return -1; }

  // Smallest per-message budget the protocol needs on an n-vertex graph.
  // The simulator raises the default budget to this value.
  virtual int min_budget_bits(int n) const {
    (void)n;
    return 0;
  }
};

}  // namespace smallcut
