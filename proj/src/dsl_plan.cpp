#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <tuple>

#include "skeinlab/dsl.hpp"

namespace skeinlab {

namespace {

struct Node {
  std::vector<Port> legs;
  std::size_t slot = 0;
  std::size_t min_box = 0;
  bool alive = true;
};

}  // namespace

ContractionPlan compile(const DiagramIR& ir, std::size_t guard) {
  ir.validate();
  ContractionPlan plan;
  plan.boxes = ir.boxes;
  plan.boundary_rank = ir.boundary.size();

  std::map<Port, std::optional<Port>> partner;
  for (const auto& w : ir.wires) {
    partner[w.a] = w.b;
    partner[w.b] = w.a;
  }
  for (const auto& p : ir.boundary) partner[p] = std::nullopt;

  std::vector<Node> nodes;
  std::map<Port, std::size_t> owner;
  auto pending = [&](const Node& n) {
    return static_cast<std::size_t>(std::count_if(n.legs.begin(), n.legs.end(), [&](Port p) { return partner.at(p).has_value(); }));
  };

  for (std::size_t b = 0; b < ir.boxes.size(); ++b) {
    Node node;
    node.slot = plan.slot_count++;
    node.min_box = b;
    PlanStep load;
    load.op = PlanStep::Op::Load;
    load.target = node.slot;
    load.lhs = b;
    plan.steps.push_back(load);

    PlanStep trace;
    trace.op = PlanStep::Op::Trace;
    trace.lhs = node.slot;
    for (std::size_t leg = 0; leg < ir.boxes[b].arity; ++leg) {
      const auto& q = partner.at(Port{b, leg});
      if (q && q->box == b) {
        if (q->leg > leg) trace.pairs.emplace_back(leg, q->leg);
      } else {
        node.legs.push_back(Port{b, leg});
      }
    }
    if (!trace.pairs.empty()) {
      node.slot = trace.target = plan.slot_count++;
      plan.steps.push_back(trace);
    }
    for (Port p : node.legs) owner[p] = nodes.size();
    nodes.push_back(std::move(node));
  }

  auto alive_count = [&] { return std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.alive; }); };

  while (alive_count() > 1) {
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::optional<Key> best;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!nodes[i].alive) continue;
      std::map<std::size_t, std::size_t> shared;
      for (Port p : nodes[i].legs) {
        const auto& q = partner.at(p);
        if (q) ++shared[owner.at(*q)];
      }
      const std::size_t pi = pending(nodes[i]);
      for (const auto& [j, count] : shared) {
        if (j <= i) continue;
        const std::size_t result = pi + pending(nodes[j]) - 2 * count;
        Key key{result, std::min(nodes[i].min_box, nodes[j].min_box), std::max(nodes[i].min_box, nodes[j].min_box)};
        if (!best || key < *best) {
          best = key;
          bi = i;
          bj = j;
        }
      }
    }
    if (!best) {
      // Disconnected pieces: outer product of the two earliest nodes.
      std::vector<std::size_t> alive;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].alive) alive.push_back(i);
      }
      std::sort(alive.begin(), alive.end(), [&](std::size_t x, std::size_t y) { return nodes[x].min_box < nodes[y].min_box; });
      bi = alive[0];
      bj = alive[1];
    }
    if (nodes[bj].min_box < nodes[bi].min_box) std::swap(bi, bj);

    Node& a = nodes[bi];
    Node& b = nodes[bj];
    PlanStep join;
    join.op = PlanStep::Op::Join;
    join.lhs = a.slot;
    join.rhs = b.slot;
    std::vector<bool> a_used(a.legs.size(), false), b_used(b.legs.size(), false);
    for (std::size_t x = 0; x < a.legs.size(); ++x) {
      const auto& q = partner.at(a.legs[x]);
      if (!q || owner.at(*q) != bj) continue;
      auto y = static_cast<std::size_t>(std::find(b.legs.begin(), b.legs.end(), *q) - b.legs.begin());
      join.pairs.emplace_back(x, y);
      a_used[x] = b_used[y] = true;
    }
    Node merged;
    for (std::size_t x = 0; x < a.legs.size(); ++x) {
      if (!a_used[x]) merged.legs.push_back(a.legs[x]);
    }
    for (std::size_t y = 0; y < b.legs.size(); ++y) {
      if (!b_used[y]) merged.legs.push_back(b.legs[y]);
    }
    const std::size_t result = pending(merged);
    if (result > guard && result > std::max(pending(a), pending(b))) {
      throw GuardExceeded("contraction needs an intermediate with " + std::to_string(result) +
                          " pending legs, above the guard of " + std::to_string(guard));
    }
    plan.peak_rank = std::max(plan.peak_rank, result);
    merged.min_box = std::min(a.min_box, b.min_box);
    merged.slot = join.target = plan.slot_count++;
    plan.steps.push_back(join);
    a.alive = b.alive = false;
    for (Port p : merged.legs) owner[p] = nodes.size();
    nodes.push_back(std::move(merged));
  }

  if (nodes.empty()) return plan;
  const Node& last = *std::find_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.alive; });
  plan.result_slot = last.slot;
  PlanStep reorder;
  reorder.op = PlanStep::Op::Reorder;
  reorder.lhs = last.slot;
  bool identity = true;
  for (std::size_t j = 0; j < ir.boundary.size(); ++j) {
    auto pos = static_cast<std::size_t>(std::find(last.legs.begin(), last.legs.end(), ir.boundary[j]) - last.legs.begin());
    reorder.order.push_back(pos);
    identity = identity && pos == j;
  }
  if (!identity) {
    plan.result_slot = reorder.target = plan.slot_count++;
    plan.steps.push_back(reorder);
  }
  return plan;
}

SparseTensor run(const ModelContext& ctx, const ContractionPlan& plan, const Bindings& bindings) {
  if (plan.steps.empty()) return SparseTensor::scalar(1, ctx.dim());
  std::vector<std::optional<SparseTensor>> slots(plan.slot_count);
  std::map<std::pair<BoxKind, std::size_t>, SparseTensor> cache;
  auto take = [&](std::size_t slot) {
    SparseTensor t = std::move(*slots.at(slot));
    slots[slot].reset();
    return t;
  };
  auto load = [&](const Box& box) -> SparseTensor {
    if (box.kind == BoxKind::Custom) {
      auto it = bindings.find(box.tensor_name);
      if (it == bindings.end()) throw InvalidArgument("tensor '" + box.tensor_name + "' is not bound");
      if (it->second.rank() != box.arity || it->second.dim() != ctx.dim()) {
        throw InvalidArgument("tensor '" + box.tensor_name + "' has rank " + std::to_string(it->second.rank()) + " and dimension " +
                              std::to_string(it->second.dim()) + ", box '" + box.id + "' needs rank " + std::to_string(box.arity) +
                              " and dimension " + std::to_string(ctx.dim()));
      }
      return it->second;
    }
    auto key = std::make_pair(box.kind, box.arity);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    SparseTensor t = [&] {
      switch (box.kind) {
        case BoxKind::Ghz: return ghz(ctx, box.arity);
        case BoxKind::Transposition: return transposition(ctx);
        default:
          if (box.arity != ctx.dim()) throw InvalidArgument("S box '" + box.id + "' must have " + std::to_string(ctx.dim()) + " legs");
          return molecule(ctx);
      }
    }();
    return cache.emplace(key, std::move(t)).first->second;
  };

  for (const auto& step : plan.steps) {
    switch (step.op) {
      case PlanStep::Op::Load: slots.at(step.target) = load(plan.boxes.at(step.lhs)); break;
      case PlanStep::Op::Trace: slots.at(step.target) = trace_legs(take(step.lhs), step.pairs); break;
      case PlanStep::Op::Join: {
        SparseTensor a = take(step.lhs);
        SparseTensor b = take(step.rhs);
        slots.at(step.target) = contract_product(a, b, step.pairs);
        break;
      }
      case PlanStep::Op::Reorder: slots.at(step.target) = permute_legs(take(step.lhs), step.order); break;
    }
  }
  return take(plan.result_slot);
}

}  // namespace skeinlab
