#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "skeinlab/skein.hpp"

namespace skeinlab {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct PortIndex {
  explicit PortIndex(const DiagramIR& d) {
    offset.reserve(d.boxes.size() + 1);
    offset.push_back(0);
    for (const auto& b : d.boxes) offset.push_back(offset.back() + b.arity);
  }
  std::size_t operator()(Port p) const { return offset[p.box] + p.leg; }
  std::size_t size() const { return offset.back(); }
  std::vector<std::size_t> offset;
};

UnionFind merge_ports(const DiagramIR& d, const PortIndex& index) {
  UnionFind uf(index.size());
  for (const auto& w : d.wires) uf.unite(index(w.a), index(w.b));
  for (std::size_t b = 0; b < d.boxes.size(); ++b) {
    const Box& box = d.boxes[b];
    if (box.kind == BoxKind::Ghz) {
      for (std::size_t leg = 1; leg < box.arity; ++leg) uf.unite(index(Port{b, 0}), index(Port{b, leg}));
    } else if (box.kind == BoxKind::Transposition) {
      uf.unite(index(Port{b, 0}), index(Port{b, 2}));
      uf.unite(index(Port{b, 1}), index(Port{b, 3}));
    }
  }
  return uf;
}

}  // namespace

WireComponentSummary summarize_components(const DiagramIR& diagram) {
  diagram.validate();
  PortIndex index(diagram);
  UnionFind uf = merge_ports(diagram, index);
  std::vector<std::size_t> class_of(index.size(), SIZE_MAX);
  std::vector<bool> open(index.size(), false);
  WireComponentSummary summary;
  for (std::size_t b = 0; b < diagram.boxes.size(); ++b) {
    for (std::size_t leg = 0; leg < diagram.boxes[b].arity; ++leg) {
      std::size_t root = uf.find(index(Port{b, leg}));
      if (class_of[root] == SIZE_MAX) {
        class_of[root] = summary.components.size();
        summary.components.emplace_back();
      }
      summary.components[class_of[root]].push_back(Port{b, leg});
    }
  }
  for (const auto& p : diagram.boundary) open[class_of[uf.find(index(p))]] = true;
  summary.s_count = diagram.count(BoxKind::Molecule);
  for (std::size_t b = 0; b < diagram.boxes.size(); ++b) {
    if (diagram.boxes[b].kind != BoxKind::Molecule) continue;
    for (std::size_t leg = 0; leg < diagram.boxes[b].arity; ++leg) open[class_of[uf.find(index(Port{b, leg}))]] = true;
  }
  summary.closed_components = static_cast<std::size_t>(std::count(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(summary.components.size()), false));
  return summary;
}

namespace {

struct ClosedEvaluator {
  const ModelContext& ctx;
  std::vector<std::vector<std::size_t>> s_legs;  // class id of each leg, per S box
  std::size_t terms = 0;

  static bool distinct(UnionFind& uf, const std::vector<std::size_t>& legs, std::vector<std::size_t>& scratch) {
    scratch.clear();
    for (std::size_t c : legs) scratch.push_back(uf.find(c));
    std::sort(scratch.begin(), scratch.end());
    return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
  }

  Integer eval(UnionFind uf, std::size_t next) {
    std::vector<std::size_t> scratch;
    if (!distinct(uf, s_legs[0], scratch)) return 0;
    for (std::size_t s = next; s < s_legs.size(); ++s) {
      if (!distinct(uf, s_legs[s], scratch)) return 0;
    }
    if (next == s_legs.size()) return Integer(static_cast<unsigned long>(ctx.group_order()));
    Integer total = 0;
    for (const auto& h : ctx.action().elements()) {
      ++terms;
      UnionFind merged = uf;
      for (std::size_t k = 0; k < s_legs[next].size(); ++k) merged.unite(s_legs[next][k], s_legs[0][h(static_cast<Index>(k))]);
      total += eval(std::move(merged), next + 1);
    }
    return total;
  }
};

}  // namespace

ClosedEvaluation evaluate_closed(const ModelContext& ctx, const DiagramIR& diagram, std::size_t term_budget) {
  if (!diagram.is_closed()) throw InvalidArgument("evaluate_closed needs a closed diagram");
  for (const auto& box : diagram.boxes) {
    if (box.kind == BoxKind::Custom) throw InvalidArgument("box '" + box.id + "' is a named tensor; use dense evaluation");
    if (box.kind == BoxKind::Molecule && box.arity != ctx.dim()) {
      throw InvalidArgument("S box '" + box.id + "' must have " + std::to_string(ctx.dim()) + " legs");
    }
  }
  WireComponentSummary summary = summarize_components(diagram);

  std::size_t terms_needed = 1;
  for (std::size_t s = 1; s < summary.s_count; ++s) {
    if (terms_needed > term_budget / ctx.group_order()) {
      throw BudgetExceeded("expanding " + std::to_string(summary.s_count) + " S boxes needs more than " +
                           std::to_string(term_budget) + " terms");
    }
    terms_needed *= ctx.group_order();
  }

  ClosedEvaluation result;
  result.s_boxes = summary.s_count;
  result.components = summary.closed_components;
  Integer value = pow(Integer(static_cast<unsigned long>(ctx.dim())), summary.closed_components);
  if (summary.s_count > 0) {
    std::map<Port, std::size_t> class_of;
    for (std::size_t c = 0; c < summary.components.size(); ++c) {
      for (Port p : summary.components[c]) class_of[p] = c;
    }
    ClosedEvaluator evaluator{ctx, {}, 0};
    for (std::size_t b = 0; b < diagram.boxes.size(); ++b) {
      if (diagram.boxes[b].kind != BoxKind::Molecule) continue;
      std::vector<std::size_t> legs(ctx.dim());
      for (std::size_t k = 0; k < legs.size(); ++k) legs[k] = class_of.at(Port{b, k});
      evaluator.s_legs.push_back(std::move(legs));
    }
    value *= evaluator.eval(UnionFind(summary.components.size()), 1);
    result.terms_expanded = evaluator.terms;
  }
  result.value = Rational(value);
  return result;
}

SparseTensor evaluate_dense(const ModelContext& ctx, const DiagramIR& diagram, std::size_t guard, const Bindings& bindings) {
  return run(ctx, compile(diagram, guard), bindings);
}

std::vector<DiagramIR> expand_molecule_pair(const ModelContext& ctx, const DiagramIR& diagram) {
  diagram.validate();
  std::vector<std::size_t> s_boxes;
  for (std::size_t b = 0; b < diagram.boxes.size(); ++b) {
    if (diagram.boxes[b].kind == BoxKind::Molecule) s_boxes.push_back(b);
  }
  if (s_boxes.size() < 2) throw InvalidArgument("expand_molecule_pair needs at least two S boxes");
  const std::size_t sa = s_boxes[0], sb = s_boxes[1], d = ctx.dim();
  if (diagram.boxes[sa].arity != d || diagram.boxes[sb].arity != d) throw InvalidArgument("S boxes must have d legs");

  std::vector<DiagramIR> terms;
  terms.reserve(ctx.group_order());
  for (const auto& h : ctx.action().elements()) {
    DiagramIR out;
    std::vector<std::size_t> new_index(diagram.boxes.size(), SIZE_MAX);
    for (std::size_t b = 0; b < diagram.boxes.size(); ++b) {
      if (b == sb) continue;
      new_index[b] = out.boxes.size();
      out.boxes.push_back(diagram.boxes[b]);
    }
    std::size_t counter = 0;
    std::vector<std::size_t> split(d);
    for (std::size_t k = 0; k < d; ++k) {
      std::string id;
      do {
        id = "split" + std::to_string(counter++);
      } while (diagram.find_box(id));
      split[k] = out.add_ghz(id, 3);
    }
    // Leg h(k) of the first S feeds splitter k; the splitter inherits that
    // leg's old connection on leg 1 and leg k of the second S on leg 2.
    std::vector<std::size_t> splitter_of_leg(d);
    for (std::size_t k = 0; k < d; ++k) splitter_of_leg[h(static_cast<Index>(k))] = split[k];
    auto map_port = [&](Port p) {
      if (p.box == sa) return Port{splitter_of_leg[p.leg], 1};
      if (p.box == sb) return Port{split[p.leg], 2};
      return Port{new_index[p.box], p.leg};
    };
    for (const auto& w : diagram.wires) out.connect(map_port(w.a), map_port(w.b));
    for (std::size_t leg = 0; leg < d; ++leg) out.connect(Port{new_index[sa], leg}, Port{splitter_of_leg[leg], 0});
    for (const auto& p : diagram.boundary) out.open(map_port(p));
    terms.push_back(std::move(out));
  }
  return terms;
}

}  // namespace skeinlab
