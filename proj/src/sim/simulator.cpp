#include "smallcut/sim/simulator.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "smallcut/prng.hpp"

namespace smallcut {

Simulator::Simulator(const Graph& g, SimOptions opt) : g_(&g), opt_(opt) {
  if (opt_.leader < 0 || opt_.leader >= g.n())
    throw std::invalid_argument("simulator: leader out of range");
}

SimResult Simulator::run(Protocol& p) {
  return run(p, std::vector<Store>(static_cast<std::size_t>(g_->n())));
}

SimResult Simulator::run(Protocol& p, std::vector<Store> stores) {
  const Graph& g = *g_;
  const int n = g.n();
  if (static_cast<int>(stores.size()) != n)
    throw std::invalid_argument("simulator: store count != n");

  SimResult res;
  res.stores = std::move(stores);

  int budget = opt_.budget_bits;
  if (budget <= 0) budget = 8 * std::max(1, ceil_log2(static_cast<std::uint64_t>(n)));
  budget = std::max(budget, p.min_budget_bits(n));
  res.budget_bits = budget;

  int max_rounds = opt_.max_rounds > 0 ? opt_.max_rounds : 20 * n + 200;

  std::vector<Prng> rngs;
  rngs.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) rngs.emplace_back(Prng::mix(opt_.seed, static_cast<std::uint64_t>(v)));

  const bool quiescent = p.single_initiator();
  std::vector<char> activated(static_cast<std::size_t>(n), 0);
  activated[static_cast<std::size_t>(opt_.leader)] = 1;

  std::vector<std::vector<Message>> inboxes(static_cast<std::size_t>(n));
  bool done = false;

  for (int round = 0; !done; ++round) {
    if (round >= max_rounds)
      throw SimFault(SimFault::Kind::kMaxRounds,
                     "protocol '" + p.name() + "' still running after " +
                         std::to_string(max_rounds) + " rounds");

    std::vector<std::vector<Message>> next(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      NodeCtx ctx{StoreRef(res.stores[static_cast<std::size_t>(v)])};
      ctx.id = v;
      ctx.round = round;
      ctx.n = n;
      ctx.leader = opt_.leader;
      ctx.adj = &g.adj(v);
      ctx.rng = &rngs[static_cast<std::size_t>(v)];
      ctx.inbox = &inboxes[static_cast<std::size_t>(v)];

      const bool must_be_quiet = quiescent && !activated[static_cast<std::size_t>(v)];
      Bytes before;
      std::uint64_t rng_pos_before = 0;
      if (must_be_quiet) {
        before = res.stores[static_cast<std::size_t>(v)].snapshot();
        rng_pos_before = ctx.rng->position();
      }

      p.step(ctx);

      if (must_be_quiet) {
        if (!ctx.outbox.empty())
          throw SimFault(SimFault::Kind::kQuiescence,
                         "node " + std::to_string(v) + " sent before activation");
        if (ctx.done_request)
          throw SimFault(SimFault::Kind::kQuiescence,
                         "node " + std::to_string(v) + " signalled done before activation");
        if (res.stores[static_cast<std::size_t>(v)].snapshot() != before ||
            ctx.rng->position() != rng_pos_before)
          throw SimFault(SimFault::Kind::kQuiescence,
                         "node " + std::to_string(v) + " changed state before activation");
      }

      std::set<Vertex> sent_to;
      for (const Message& msg : ctx.outbox) {
        if (msg.payload.width() > budget)
          throw SimFault(SimFault::Kind::kOverBudget,
                         "node " + std::to_string(v) + " sent " +
                             std::to_string(msg.payload.width()) + " bits (budget " +
                             std::to_string(budget) + ")");
        bool neighbor = false;
        for (const Adjacency& a : g.adj(v)) neighbor = neighbor || a.to == msg.dst;
        if (!neighbor)
          throw SimFault(SimFault::Kind::kNotNeighbor,
                         "node " + std::to_string(v) + " sent to non-neighbor " +
                             std::to_string(msg.dst));
        if (!sent_to.insert(msg.dst).second)
          throw SimFault(SimFault::Kind::kDuplicateEdge,
                         "node " + std::to_string(v) + " sent twice to " +
                             std::to_string(msg.dst) + " in round " + std::to_string(round));

        next[static_cast<std::size_t>(msg.dst)].push_back(msg);
        ++res.messages;
        res.max_payload_bits = std::max(res.max_payload_bits, msg.payload.width());
        if (opt_.record_trace) res.trace.push_back({round, msg.src, msg.dst, msg.payload});
      }
      if (ctx.done_request && v == opt_.leader) {
        done = true;
        res.done_round = round;
      }
    }

    for (Vertex v = 0; v < n; ++v) {
      auto& box = next[static_cast<std::size_t>(v)];
      std::sort(box.begin(), box.end(),
                [](const Message& a, const Message& b) { return a.src < b.src; });
      if (!box.empty()) activated[static_cast<std::size_t>(v)] = 1;
    }
    inboxes = std::move(next);
    res.rounds = round + 1;
    if (opt_.probe >= 0 && opt_.probe < n)
      res.probe_snapshots.push_back(res.stores[static_cast<std::size_t>(opt_.probe)].snapshot());
  }
  return res;
}

}  // namespace smallcut
