#include "skeinlab/petersen.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "skeinlab/skein.hpp"

namespace skeinlab::petersen {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

KneserModel build_kneser() {
  std::vector<std::array<Index, 2>> vertices;
  for (Index a = 0; a < 5; ++a) {
    for (Index b = a + 1; b < 5; ++b) vertices.push_back({a, b});
  }
  auto index_of = [&](Index a, Index b) {
    if (a > b) std::swap(a, b);
    return static_cast<Index>(std::find(vertices.begin(), vertices.end(), std::array<Index, 2>{a, b}) - vertices.begin());
  };
  const std::size_t n = vertices.size();
  std::vector<std::vector<bool>> adjacency(n, std::vector<bool>(n, false));
  std::vector<std::pair<Index, Index>> edges;
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      const auto& x = vertices[u];
      const auto& y = vertices[v];
      if (x[0] != y[0] && x[0] != y[1] && x[1] != y[0] && x[1] != y[1]) {
        adjacency[u][v] = adjacency[v][u] = true;
        edges.emplace_back(u, v);
      }
    }
  }
  auto induced = [&](const Permutation& sigma) {
    std::vector<Index> images(n);
    for (Index v = 0; v < n; ++v) images[v] = index_of(sigma(vertices[v][0]), sigma(vertices[v][1]));
    return Permutation(std::move(images));
  };
  std::vector<Permutation> generators{induced(Permutation::from_cycles(5, {{0, 1}})),
                                      induced(Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}))};
  GroupAction action = closure(n, std::move(generators));
  return KneserModel{std::move(vertices), std::move(edges), std::move(adjacency), std::move(action)};
}

GraphInvariants graph_invariants(const KneserModel& model) {
  GraphInvariants inv;
  const std::size_t n = model.size();
  inv.edges = model.edges.size();
  inv.min_degree = n;
  for (Index u = 0; u < n; ++u) {
    std::size_t deg = static_cast<std::size_t>(std::count(model.adjacency[u].begin(), model.adjacency[u].end(), true));
    inv.min_degree = std::min(inv.min_degree, deg);
    inv.max_degree = std::max(inv.max_degree, deg);
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      for (Index c = b + 1; c < n; ++c) {
        if (model.adjacent(a, b) && model.adjacent(b, c) && model.adjacent(a, c)) ++inv.triangles;
      }
    }
  }
  // Closed walks a-b-c-e-a on four distinct vertices, each 4-cycle counted 8 times.
  std::size_t walks = 0;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (b == a || !model.adjacent(a, b)) continue;
      for (Index c = 0; c < n; ++c) {
        if (c == a || c == b || !model.adjacent(b, c)) continue;
        for (Index e = 0; e < n; ++e) {
          if (e != a && e != b && e != c && model.adjacent(c, e) && model.adjacent(e, a)) ++walks;
        }
      }
    }
  }
  inv.four_cycles = walks / 8;
  inv.group_order = model.action.order();
  inv.automorphisms = std::all_of(model.action.elements().begin(), model.action.elements().end(), [&](const Permutation& g) {
    return std::all_of(model.edges.begin(), model.edges.end(), [&](const auto& e) { return model.adjacent(g(e.first), g(e.second)); });
  });
  return inv;
}

TwoBoxBasis two_box_basis(const KneserModel& model) {
  const std::size_t n = model.size();
  TwoBoxBasis basis{SparseTensor(2, n), SparseTensor(2, n), SparseTensor(2, n)};
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      if (u == v) {
        basis.identity.add({u, v}, 1);
      } else if (model.adjacent(u, v)) {
        basis.a_gamma.add({u, v}, 1);
      } else {
        basis.a_gamma_c.add({u, v}, 1);
      }
    }
  }
  return basis;
}

SparseTensor molecule_from_graph(const KneserModel& model, std::size_t* visited) {
  const std::size_t n = model.size();
  std::vector<Index> order{0};
  std::vector<bool> queued(n, false);
  queued[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Index v = 0; v < n; ++v) {
      if (model.adjacent(order[head], v) && !queued[v]) {
        queued[v] = true;
        order.push_back(v);
      }
    }
  }
  SparseTensor result(n, n);
  IndexTuple assignment(n, 0);
  std::vector<bool> assigned(n, false);
  std::size_t nodes = 0;
  auto dfs = [&](auto& self, std::size_t depth) -> void {
    ++nodes;
    if (depth == n) {
      result.add(assignment, 1);
      return;
    }
    const Index v = order[depth];
    for (Index value = 0; value < n; ++value) {
      bool ok = true;
      for (Index w = 0; w < n && ok; ++w) {
        if (assigned[w] && model.adjacent(v, w)) ok = model.adjacent(value, assignment[w]);
      }
      if (!ok) continue;
      assignment[v] = value;
      assigned[v] = true;
      self(self, depth + 1);
      assigned[v] = false;
    }
  };
  dfs(dfs, 0);
  if (visited) *visited = nodes;
  return result;
}

DiagramIR molecule_network(const KneserModel& model) {
  DiagramIR ir;
  const std::size_t n = model.size();
  for (std::size_t v = 0; v < n; ++v) ir.add_ghz("v" + std::to_string(v), 4);
  std::vector<std::size_t> next_leg(n, 1);
  for (std::size_t e = 0; e < model.edges.size(); ++e) {
    auto [u, v] = model.edges[e];
    std::size_t box = ir.add_box(Box{"e" + std::to_string(e), BoxKind::Custom, 2, "A", false});
    ir.connect(Port{u, next_leg[u]++}, Port{box, 0});
    ir.connect(Port{box, 1}, Port{v, next_leg[v]++});
  }
  for (std::size_t v = 0; v < n; ++v) ir.open(Port{v, 0});
  return ir;
}

SparseTensor bridged_crossing(const SparseTensor& bridge) {
  if (bridge.rank() != 2) throw InvalidArgument("bridged_crossing needs a rank-2 bridge");
  SparseTensor out(4, bridge.dim());
  for (const auto& [t, value] : bridge.entries()) out.add({t[0], t[1], t[0], t[1]}, value);
  return out;
}

namespace {

ModelContext context_of(const KneserModel& model) { return ModelContext(model.action); }

Bindings adjacency_bindings(const KneserModel& model) {
  TwoBoxBasis basis = two_box_basis(model);
  Bindings b;
  b.emplace("A", basis.a_gamma);
  b.emplace("Ac", basis.a_gamma_c);
  return b;
}

SparseTensor run_source(const ModelContext& ctx, const std::string& source, const Bindings& bindings) {
  DiagramIR ir = parse_diagram(source, ParseOptions{ctx.dim()});
  return evaluate_dense(ctx, ir, 12, bindings);
}

// (a, b, a, b) with a bridge labelled `name` between the strands.
std::string bridged_source(const std::string& name) {
  return "box r = R; box p = ghz:3; box q = ghz:3; box e = tensor " + name +
         ":2;\n"
         "wire p.2 r.1; wire q.2 r.2; wire p.3 e.1; wire e.2 q.3;\n"
         "open p.1; open q.1; open r.3; open r.4;\n";
}

IdentityCheck compare(std::string name, const SparseTensor& lhs, const SparseTensor& rhs, std::string detail) {
  SparseTensor residual = lhs - rhs;
  return IdentityCheck{std::move(name), std::move(detail), residual.support_size(), residual.is_zero()};
}

}  // namespace

Report verify_b1(const KneserModel& model) {
  const ModelContext ctx = context_of(model);
  const Bindings bindings = adjacency_bindings(model);
  const std::size_t n = model.size();
  Report report;

  // Four vertices on a square, vertex j carrying boundary leg j.
  const SparseTensor b1 = run_source(ctx,
                                     "box v1 = ghz:3; box v2 = ghz:3; box v3 = ghz:3; box v4 = ghz:3;\n"
                                     "box e1 = tensor A:2; box e2 = tensor A:2; box e3 = tensor A:2; box e4 = tensor A:2;\n"
                                     "wire v1.3 e1.1; wire e1.2 v2.2; wire v2.3 e2.1; wire e2.2 v3.2;\n"
                                     "wire v3.3 e3.1; wire e3.2 v4.2; wire v4.3 e4.1; wire e4.2 v1.2;\n"
                                     "open v1.1; open v2.1; open v3.1; open v4.1;\n",
                                     bindings);
  SparseTensor direct(4, n);
  bool distinct_zero = true;
  bool alternating_one = true;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        for (Index e = 0; e < n; ++e) {
          if (model.adjacent(a, b) && model.adjacent(b, c) && model.adjacent(c, e) && model.adjacent(e, a)) direct.add({a, b, c, e}, 1);
        }
      }
    }
  }
  for (const auto& [t, value] : b1.entries()) {
    std::set<Index> values(t.begin(), t.end());
    if (values.size() == 4) distinct_zero = false;
  }
  for (const auto& [u, v] : model.edges) {
    alternating_one = alternating_one && b1.at(IndexTuple{u, v, u, v}) == 1 && b1.at(IndexTuple{v, u, v, u}) == 1;
  }
  report.checks.push_back(compare("b1-network", b1, direct, "square of A boxes against the product of four adjacencies"));
  report.checks.push_back(IdentityCheck{"b1-alternating", "entry 1 at (v,w,v,w) for every edge", 0, alternating_one});
  report.checks.push_back(IdentityCheck{"b1-no-distinct", "no support tuple has four distinct vertices", 0, distinct_zero});

  const SparseTensor t1 = run_source(ctx,
                                     "box c = ghz:4; box e2 = tensor A:2; box e4 = tensor A:2;\n"
                                     "wire c.2 e2.1; wire c.4 e4.1;\n"
                                     "open c.1; open e2.2; open c.3; open e4.2;\n",
                                     bindings);
  const SparseTensor t2 = run_source(ctx,
                                     "box c = ghz:4; box e1 = tensor A:2; box e3 = tensor A:2;\n"
                                     "wire c.1 e1.1; wire c.3 e3.1;\n"
                                     "open e1.2; open c.2; open e3.2; open c.4;\n",
                                     bindings);
  const SparseTensor xa = run_source(ctx, bridged_source("A"), bindings);
  report.checks.push_back(compare("bridge-network", xa, bridged_crossing(bindings.at("A")), "bridged crossing network against its formula"));
  report.checks.push_back(compare("b1-decomposition", b1, t1 + t2 - xa, "B1 = T1 + T2 - X_A"));
  report.checks.push_back(compare("bridge-generated", xa, t1 + t2 - b1, "X_A is a combination of diagrams built from A and ghz"));
  return report;
}

Report verify_b2(const KneserModel& model) {
  const ModelContext ctx = context_of(model);
  const Bindings bindings = adjacency_bindings(model);
  const TwoBoxBasis basis = two_box_basis(model);
  const std::size_t n = model.size();
  Report report;

  std::ostringstream src;
  src << "box c = ghz:5; box r = ghz:5;\n";
  for (int j = 1; j <= 4; ++j) src << "box i" << j << " = ghz:5;\n";
  src << "box cr = tensor A:2; wire c.1 cr.1; wire cr.2 r.1;\n";
  for (int j = 1; j <= 4; ++j) {
    const int next = j % 4 + 1;
    src << "box ca" << j << " = tensor A:2; wire c." << j + 1 << " ca" << j << ".1; wire ca" << j << ".2 i" << j << ".2;\n";
    src << "box rn" << j << " = tensor Ac:2; wire r." << j + 1 << " rn" << j << ".1; wire rn" << j << ".2 i" << j << ".3;\n";
    src << "box s" << j << " = tensor Ac:2; wire i" << j << ".4 s" << j << ".1; wire s" << j << ".2 i" << next << ".5;\n";
  }
  for (int j = 1; j <= 4; ++j) src << "open i" << j << ".1;\n";
  const SparseTensor b2 = run_source(ctx, src.str(), bindings);

  const auto& A = model.adjacency;
  auto Ac = [&](Index u, Index v) { return u != v && !A[u][v]; };
  auto term = [&](Index c, Index r, const IndexTuple& i) {
    if (!A[c][r]) return false;
    for (std::size_t j = 0; j < 4; ++j) {
      if (!A[c][i[j]] || !Ac(r, i[j]) || !Ac(i[j], i[(j + 1) % 4])) return false;
    }
    return true;
  };
  SparseTensor direct(4, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        for (Index e = 0; e < n; ++e) {
          IndexTuple i{a, b, c, e};
          long count = 0;
          for (Index cv = 0; cv < n; ++cv) {
            for (Index rv = 0; rv < n; ++rv) count += term(cv, rv, i) ? 1 : 0;
          }
          if (count) direct.add(std::move(i), count);
        }
      }
    }
  }
  report.checks.push_back(compare("b2-network", b2, direct, "network against the direct sum over c and r"));
  report.checks.push_back(compare("b2-decomposition", b2, bridged_crossing(basis.a_gamma_c), "B2 = X_Ac"));

  // A single term: c = {0,1}, r = {2,3}.
  const Index c = 0, r = 7;
  std::set<Index> admissible;
  bool alternating = true;
  std::size_t support = 0;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index x = 0; x < n; ++x) {
        for (Index e = 0; e < n; ++e) {
          IndexTuple i{a, b, x, e};
          if (!term(c, r, i)) continue;
          ++support;
          admissible.insert(i.begin(), i.end());
          alternating = alternating && a == x && b == e && a != b;
        }
      }
    }
  }
  const std::set<Index> expected{8, 9};  // {2,4} and {3,4}
  std::ostringstream detail;
  detail << support << " supported tuples on vertices";
  for (Index v : admissible) detail << " {" << model.vertices[v][0] << "," << model.vertices[v][1] << "}";
  report.checks.push_back(IdentityCheck{"b2-fixed-term", detail.str(), 0,
                                        support > 0 && alternating && std::includes(expected.begin(), expected.end(), admissible.begin(), admissible.end())});
  return report;
}

}  // namespace skeinlab::petersen
