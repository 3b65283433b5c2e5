#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "skeinlab/dsl.hpp"
#include "skeinlab/model.hpp"
#include "skeinlab/tensor.hpp"

namespace skeinlab::petersen {

/// The Kneser graph KG(5,2): vertices are the 2-subsets of {0..4} in
/// lexicographic order, adjacent when disjoint. S5 acts through its action on
/// {0..4}.
struct KneserModel {
  std::vector<std::array<Index, 2>> vertices;
  std::vector<std::pair<Index, Index>> edges;  // (u, v) with u < v, lexicographic
  std::vector<std::vector<bool>> adjacency;
  GroupAction action;

  bool adjacent(Index u, Index v) const { return adjacency[u][v]; }
  std::size_t size() const { return vertices.size(); }
};

KneserModel build_kneser();

struct GraphInvariants {
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t triangles = 0;
  std::size_t four_cycles = 0;
  std::size_t group_order = 0;
  bool automorphisms = false;  // every group element preserves adjacency
};

GraphInvariants graph_invariants(const KneserModel& model);

struct TwoBoxBasis {
  SparseTensor identity;
  SparseTensor a_gamma;
  SparseTensor a_gamma_c;
};

TwoBoxBasis two_box_basis(const KneserModel& model);

// The molecule read off the graph: entry at i is the product over edges (j,k)
// of A(i_j, i_k). Found by a depth-first search over vertex assignments in
// breadth-first order, pruning on every violated edge.
SparseTensor molecule_from_graph(const KneserModel& model, std::size_t* visited = nullptr);

// The same tensor as a network of ghz(4) vertex boxes and `A` edge boxes.
DiagramIR molecule_network(const KneserModel& model);

// sum over i, j of M(i, j) (i, j, i, j): a crossing whose strands are joined by
// a bridge carrying M.
SparseTensor bridged_crossing(const SparseTensor& bridge);

struct IdentityCheck {
  std::string name;
  std::string detail;
  std::size_t residual_support = 0;
  bool passed = false;
};

struct Report {
  std::vector<IdentityCheck> checks;
  bool passed() const;
};

Report verify_b1(const KneserModel& model);
Report verify_b2(const KneserModel& model);

struct GenerationOptions {
  unsigned max_tensor_rank = 4;
  unsigned max_work_rank = 6;  // bound on legs touched by a single gluing
  std::size_t max_rounds = 16;
  std::size_t max_candidates = 5'000'000;
};

struct GenerationReport {
  Report identities;                // J decomposition and R decomposition
  std::vector<std::size_t> ranks;   // achieved rank per tensor rank 0..max
  std::vector<std::size_t> targets; // dim of the invariant space per rank
  bool transposition_in_span = false;
  bool stabilized = false;
  bool budget_exhausted = false;
  std::size_t rounds = 0;
  std::size_t candidates = 0;
  bool passed() const;
};

GenerationReport verify_generation(const KneserModel& model, const GenerationOptions& options = {});

}  // namespace skeinlab::petersen
