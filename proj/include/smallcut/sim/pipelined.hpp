#pragma once

#include <memory>
#include <vector>

#include "smallcut/sim/protocol.hpp"

namespace smallcut {

// Runs s instances of a protocol concurrently, instance k starting at round
// k. Sub-messages travelling the same edge in the same round are framed as
// [instance tag][length][payload] and concatenated into one physical
// message.
//
// If every instance sends at most C0 messages per edge direction over its
// whole run, and the send schedule of an instance does not depend on its
// random values (true for the tree-driven protocols here: send times are
// fixed by the graph, only payload contents vary), then instance k repeats
// the schedule shifted by k rounds, so at most C0 sub-messages share an
// edge direction in any physical round. The frame bound is enforced at run
// time and its violation is a simulation fault.
class Pipelined : public Protocol {
 public:
  Pipelined(std::vector<std::unique_ptr<Protocol>> instances,
            std::vector<std::uint64_t> instance_seeds);

  std::string name() const override;
  void step(NodeCtx& ctx) override;
  bool single_initiator() const override;
  int max_messages_per_edge() const override;
  int min_budget_bits(int n) const override;

  static constexpr int kLenBits = 12;
  int tag_bits() const { return tag_bits_; }

 private:
  std::vector<std::unique_ptr<Protocol>> instances_;
  std::vector<std::uint64_t> seeds_;
  int tag_bits_;
  int c0_;
  // Lazily initialized per-node state (the protocol object is shared by all
  // nodes, so per-node state is indexed by node id).
  std::vector<std::vector<Prng>> rngs_;         // [node][instance]
  std::vector<std::vector<char>> done_;         // [node][instance]
  std::vector<char> all_done_announced_;        // [node]

  void ensure_node_state(int n);
};

}  // namespace smallcut
