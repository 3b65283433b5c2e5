#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

std::size_t orbit_count_by_enumeration(const GroupAction& action, unsigned n) {
  const std::size_t d = action.degree();
  std::set<IndexTuple> seen;
  std::size_t orbits = 0;
  IndexTuple t(n, 0);
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= d;
  for (std::size_t f = 0; f < total; ++f) {
    std::size_t x = f;
    for (unsigned i = n; i-- > 0;) {
      t[i] = static_cast<Index>(x % d);
      x /= d;
    }
    if (seen.count(t)) continue;
    ++orbits;
    std::deque<IndexTuple> queue{t};
    seen.insert(t);
    while (!queue.empty()) {
      IndexTuple cur = queue.front();
      queue.pop_front();
      for (const auto& g : action.generators()) {
        IndexTuple next(cur.size());
        for (std::size_t k = 0; k < cur.size(); ++k) next[k] = g(cur[k]);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return orbits;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

Rational box_entry(const GroupAction& action, const Box& box, const IndexTuple& t, const Bindings& bindings) {
  switch (box.kind) {
    case BoxKind::Ghz:
      return std::all_of(t.begin(), t.end(), [&](Index v) { return v == t[0]; }) ? 1 : 0;
    case BoxKind::Transposition:
      return t[0] == t[2] && t[1] == t[3] ? 1 : 0;
    case BoxKind::Molecule: {
      std::set<Index> distinct(t.begin(), t.end());
      if (distinct.size() != t.size()) return 0;
      return action.contains(Permutation(t)) ? 1 : 0;
    }
    case BoxKind::Custom:
      return bindings.at(box.tensor_name).at(t);
  }
  return 0;
}

}  // namespace

SparseTensor brute_force(const GroupAction& action, const DiagramIR& ir, const Bindings& bindings) {
  ir.validate();
  const std::size_t d = action.degree();
  std::map<Port, std::size_t> var;
  std::size_t vars = 0;
  for (const auto& w : ir.wires) {
    var[w.a] = vars;
    var[w.b] = vars++;
  }
  std::vector<std::size_t> boundary_vars;
  for (const auto& p : ir.boundary) {
    var[p] = vars;
    boundary_vars.push_back(vars++);
  }
  // Check each box as soon as its last variable is assigned.
  std::vector<std::vector<std::size_t>> ready(vars + 1);
  for (std::size_t b = 0; b < ir.boxes.size(); ++b) {
    std::size_t last = 0;
    for (std::size_t leg = 0; leg < ir.boxes[b].arity; ++leg) last = std::max(last, var.at(Port{b, leg}) + 1);
    ready[last].push_back(b);
  }
  SparseTensor out(ir.boundary.size(), d);
  std::vector<Index> value(vars, 0);
  auto weight_of = [&](std::size_t level, Rational& w) {
    for (std::size_t b : ready[level]) {
      IndexTuple t(ir.boxes[b].arity);
      for (std::size_t leg = 0; leg < t.size(); ++leg) t[leg] = value[var.at(Port{b, leg})];
      w *= box_entry(action, ir.boxes[b], t, bindings);
      if (w == 0) return false;
    }
    return true;
  };
  auto rec = [&](auto& self, std::size_t level, Rational w) -> void {
    if (!weight_of(level, w)) return;
    if (level == vars) {
      IndexTuple t;
      for (std::size_t v : boundary_vars) t.push_back(value[v]);
      out.add(std::move(t), w);
      return;
    }
    for (Index v = 0; v < d; ++v) {
      value[level] = v;
      self(self, level + 1, w);
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

std::size_t closed_components(const DiagramIR& ir) {
  std::map<Port, std::vector<Port>> adj;
  auto link = [&](Port a, Port b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (std::size_t b = 0; b < ir.boxes.size(); ++b) {
    const Box& box = ir.boxes[b];
    for (std::size_t leg = 0; leg < box.arity; ++leg) adj[Port{b, leg}];
    if (box.kind == BoxKind::Ghz) {
      for (std::size_t leg = 0; leg + 1 < box.arity; ++leg) link(Port{b, leg}, Port{b, leg + 1});
    } else if (box.kind == BoxKind::Transposition) {
      link(Port{b, 0}, Port{b, 2});
      link(Port{b, 1}, Port{b, 3});
    }
  }
  for (const auto& w : ir.wires) link(w.a, w.b);
  std::set<Port> open(ir.boundary.begin(), ir.boundary.end());
  std::set<Port> seen;
  std::size_t closed = 0;
  for (const auto& [start, unused] : adj) {
    if (seen.count(start)) continue;
    bool touches = false;
    std::deque<Port> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      Port p = queue.front();
      queue.pop_front();
      const BoxKind kind = ir.boxes[p.box].kind;
      if (open.count(p) || kind == BoxKind::Molecule || kind == BoxKind::Custom) touches = true;
      for (Port q : adj[p]) {
        if (seen.insert(q).second) queue.push_back(q);
      }
    }
    if (!touches) ++closed;
  }
  return closed;
}

DiagramIR random_diagram(std::mt19937_64& rng, const RandomDiagramOptions& o) {
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  DiagramIR ir;
  const std::size_t s = uniform(0, o.max_s), r = uniform(0, o.max_r), g = uniform(1, o.max_ghz);
  for (std::size_t i = 0; i < s; ++i) ir.add_box(Box{"s" + std::to_string(i), BoxKind::Molecule, o.dim, {}, false});
  for (std::size_t i = 0; i < r; ++i) ir.add_box(Box{"r" + std::to_string(i), BoxKind::Transposition, 4, {}, false});
  for (std::size_t i = 0; i < g; ++i) ir.add_ghz("g" + std::to_string(i), uniform(1, o.max_ghz_arity));
  std::vector<Port> ports;
  for (std::size_t b = 0; b < ir.boxes.size(); ++b) {
    for (std::size_t leg = 0; leg < ir.boxes[b].arity; ++leg) ports.push_back(Port{b, leg});
  }
  while (ports.size() < o.open_legs || (ports.size() - o.open_legs) % 2 != 0) {
    std::size_t b = ir.add_ghz("u" + std::to_string(ir.boxes.size()), 1);
    ports.push_back(Port{b, 0});
  }
  std::shuffle(ports.begin(), ports.end(), rng);
  for (std::size_t i = 0; i < o.open_legs; ++i) ir.open(ports[i]);
  for (std::size_t i = o.open_legs; i + 1 < ports.size(); i += 2) ir.connect(ports[i], ports[i + 1]);
  return ir;
}

GroupAction trivial_group(std::size_t d) { return closure(d, {}); }

GroupAction cyclic_group(std::size_t d) {
  std::vector<Index> images(d);
  for (std::size_t i = 0; i < d; ++i) images[i] = static_cast<Index>((i + 1) % d);
  return closure(d, {Permutation(images)});
}

GroupAction symmetric_group(std::size_t d) {
  std::vector<Permutation> gens;
  if (d > 1) gens.push_back(Permutation::from_cycles(d, {{0, 1}}));
  if (d > 2) {
    std::vector<Index> images(d);
    for (std::size_t i = 0; i < d; ++i) images[i] = static_cast<Index>((i + 1) % d);
    gens.emplace_back(images);
  }
  return closure(d, gens);
}

}  // namespace oracle
