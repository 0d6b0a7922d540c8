#include "smallcut/sim/pipelined.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "smallcut/sim/simulator.hpp"
#include "smallcut/sim/wire.hpp"

namespace smallcut {

Pipelined::Pipelined(std::vector<std::unique_ptr<Protocol>> instances,
                     std::vector<std::uint64_t> instance_seeds)
    : instances_(std::move(instances)), seeds_(std::move(instance_seeds)) {
  if (instances_.empty()) throw std::invalid_argument("pipelined: no instances");
  if (seeds_.size() != instances_.size())
    throw std::invalid_argument("pipelined: seed count != instance count");
  tag_bits_ = std::max(1, ceil_log2(static_cast<std::uint64_t>(instances_.size())));
  c0_ = 1;
  for (const auto& p : instances_) {
    if (p->max_messages_per_edge() < 0)
      throw std::invalid_argument("pipelined: instance '" + p->name() +
                                  "' does not declare a per-edge message bound");
    c0_ = std::max(c0_, p->max_messages_per_edge());
  }
}

std::string Pipelined::name() const {
  return "pipelined[" + std::to_string(instances_.size()) + "x" + instances_[0]->name() + "]";
}

bool Pipelined::single_initiator() const {
  for (const auto& p : instances_)
    if (!p->single_initiator()) return false;
  return true;
}

int Pipelined::max_messages_per_edge() const { return -1; }

int Pipelined::min_budget_bits(int n) const {
  int inner = 0;
  for (const auto& p : instances_) inner = std::max(inner, p->min_budget_bits(n));
  return c0_ * (tag_bits_ + kLenBits + inner);
}

void Pipelined::ensure_node_state(int n) {
  if (static_cast<int>(rngs_.size()) == n) return;
  const std::size_t s = instances_.size();
  rngs_.assign(static_cast<std::size_t>(n), {});
  done_.assign(static_cast<std::size_t>(n), std::vector<char>(s, 0));
  all_done_announced_.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    rngs_[static_cast<std::size_t>(v)].reserve(s);
    for (std::size_t k = 0; k < s; ++k)
      rngs_[static_cast<std::size_t>(v)].emplace_back(
          Prng::mix(seeds_[k], static_cast<std::uint64_t>(v)));
  }
}

void Pipelined::step(NodeCtx& ctx) {
  ensure_node_state(ctx.n);
  const std::size_t s = instances_.size();
  const std::size_t v = static_cast<std::size_t>(ctx.id);

  // Demultiplex the physical inbox into per-instance inboxes.
  std::vector<std::vector<Message>> sub_in(s);
  for (const Message& m : ctx.in()) {
    BitReader r(m.payload);
    while (!r.done()) {
      std::uint64_t tag = r.get(tag_bits_);
      int len = static_cast<int>(r.get(kLenBits));
      if (tag >= s || len > r.remaining())
        throw SimFault(SimFault::Kind::kPipelining, "malformed pipelined frame");
      sub_in[tag].push_back({m.src, m.dst, r.get_bits(len)});
    }
  }

  // Step each live instance at its virtual round, collecting sub-sends
  // per destination.
  std::map<Vertex, std::vector<std::pair<std::uint64_t, BitVec>>> out;
  bool newly_all_done = false;
  for (std::size_t k = 0; k < s; ++k) {
    int vr = ctx.round - static_cast<int>(k);
    if (vr < 0) continue;
    NodeCtx sub{ctx.store.with_prefix("i" + std::to_string(k) + "/")};
    sub.id = ctx.id;
    sub.round = vr;
    sub.n = ctx.n;
    sub.leader = ctx.leader;
    sub.adj = ctx.adj;
    sub.rng = &rngs_[v][k];
    sub.inbox = &sub_in[k];
    instances_[k]->step(sub);
    for (const Message& m : sub.outbox) out[m.dst].push_back({k, m.payload});
    if (sub.done_request && !done_[v][k]) {
      done_[v][k] = 1;
      bool all = true;
      for (char d : done_[v]) all = all && d;
      if (all && !all_done_announced_[v]) {
        all_done_announced_[v] = 1;
        newly_all_done = true;
      }
    }
  }

  for (auto& [dst, subs] : out) {
    if (static_cast<int>(subs.size()) > c0_)
      throw SimFault(SimFault::Kind::kPipelining,
                     "node " + std::to_string(ctx.id) + " -> " + std::to_string(dst) +
                         ": " + std::to_string(subs.size()) +
                         " concurrent sub-messages exceed the per-edge bound " +
                         std::to_string(c0_));
    BitWriter w;
    for (const auto& [tag, payload] : subs) {
      w.put(tag, tag_bits_);
      w.put(static_cast<std::uint64_t>(payload.width()), kLenBits);
      w.put_bits(payload);
    }
    ctx.send(dst, w.take());
  }
  if (newly_all_done) ctx.set_done();
}

}  // namespace smallcut
