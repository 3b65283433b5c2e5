#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "skeinlab/permgroup.hpp"
#include "skeinlab/tensor.hpp"

namespace skeinlab {

inline constexpr std::size_t kOrbitEnumerationGuard = 100'000'000;

/// A group-action model: a permutation group acting on the basis of V = C^d.
class ModelContext {
 public:
  explicit ModelContext(GroupAction action) : action_(std::move(action)) {}

  const GroupAction& action() const { return action_; }
  std::size_t dim() const { return action_.degree(); }
  std::size_t group_order() const { return action_.order(); }

 private:
  GroupAction action_;
};

struct OrbitBasisElement {
  IndexTuple representative;  // lexicographically least tuple of the orbit
  SparseTensor tensor;        // sum over g in G of basic(g . representative)
};

// sum_j (j, ..., j) with k legs; k = 1 is the all-ones unit.
SparseTensor ghz(const ModelContext& ctx, std::size_t k);

// sum_{i,j} (i, j, i, j): legs 0/2 and 1/3 are the two strands.
SparseTensor transposition(const ModelContext& ctx);

// sum over g in G of (g.0, g.1, ..., g.(d-1)).
SparseTensor molecule(const ModelContext& ctx);

// The group-sum orbit tensor [t]; a tuple with stabilizer of size s carries
// coefficient s.
SparseTensor orbit_sum(const ModelContext& ctx, std::span<const Index> tuple);

// One element per G-orbit on n-tuples, ordered by representative. Throws
// BudgetExceeded when d^n exceeds `guard`.
std::vector<OrbitBasisElement> orbit_basis(const ModelContext& ctx, unsigned n,
                                           std::size_t guard = kOrbitEnumerationGuard);

// Coordinates of an invariant tensor: its values at the given representatives.
std::vector<Rational> orbit_coordinates(const SparseTensor& t, std::span<const IndexTuple> representatives);

// Checks g . t == t for each generator g.
bool is_invariant(const ModelContext& ctx, const SparseTensor& t);

/// A formal linear combination of leg permutations acting on rank-n tensors.
/// pi(g) moves leg k to position g(k), so pi is a homomorphism.
class PermutationOperator {
 public:
  explicit PermutationOperator(std::size_t legs) : legs_(legs) {}

  static PermutationOperator identity(std::size_t legs);
  // p = sum over g in G of pi(g), acting on the d legs of the molecule.
  static PermutationOperator group_symmetrizer(const ModelContext& ctx);

  std::size_t legs() const { return legs_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  void add(const Permutation& g, const Rational& coefficient);

  SparseTensor apply(const SparseTensor& t) const;

  friend PermutationOperator compose(const PermutationOperator& a, const PermutationOperator& b);
  friend PermutationOperator operator*(const Rational& f, PermutationOperator op);
  bool operator==(const PermutationOperator&) const = default;

 private:
  std::size_t legs_;
  std::map<Permutation, Rational> terms_;
};

// Applies the leg permutation pi(g) to t.
SparseTensor apply_leg_permutation(const Permutation& g, const SparseTensor& t);

// Caps every molecule leg outside `representative` with the GHZ unit and keeps
// the listed legs in order; equals orbit_sum(ctx, representative).
SparseTensor orbit_from_molecule(const ModelContext& ctx, std::span<const Index> representative);

}  // namespace skeinlab
