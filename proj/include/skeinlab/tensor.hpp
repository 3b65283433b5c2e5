#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "skeinlab/permgroup.hpp"
#include "skeinlab/rational.hpp"

namespace skeinlab {

/// Rank-n tensor over the rationals on a d-dimensional space, stored sparsely
/// as a sorted map from index tuples to nonzero coefficients. A rank-0 tensor
/// is a scalar keyed by the empty tuple.
class SparseTensor {
 public:
  using Entries = std::map<IndexTuple, Rational>;

  SparseTensor(std::size_t rank, std::size_t dim);

  static SparseTensor scalar(const Rational& value, std::size_t dim);
  static SparseTensor basic(IndexTuple tuple, std::size_t dim);

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return dim_; }
  const Entries& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational at(std::span<const Index> tuple) const;
  Rational scalar_value() const;

  // Accumulates into the entry at `tuple`, erasing it if the sum is zero.
  void add(IndexTuple tuple, const Rational& value);

  SparseTensor& operator+=(const SparseTensor& other);
  SparseTensor& operator-=(const SparseTensor& other);
  SparseTensor& operator*=(const Rational& factor);

  friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
  friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
  friend SparseTensor operator*(const Rational& f, SparseTensor t) { return t *= f; }
  bool operator==(const SparseTensor& other) const = default;

 private:
  void check_tuple(std::span<const Index> tuple) const;
  void check_same_shape(const SparseTensor& other) const;

  std::size_t rank_;
  std::size_t dim_;
  Entries entries_;
};

// ---- The three spin-model operations. Positions are 0-based. ----

SparseTensor tensor_product(const SparseTensor& a, const SparseTensor& b);

// Contracts positions k and k+1 with a Kronecker delta.
SparseTensor contract(const SparseTensor& t, std::size_t k);

// Exchanges positions k and k+1.
SparseTensor permute_swap(const SparseTensor& t, std::size_t k);

Rational inner_product(const SparseTensor& a, const SparseTensor& b);

// Exact rank of the span, by fraction-free elimination on the flattened
// coefficient matrix.
std::size_t rank_of_span(std::span<const SparseTensor> tensors);

// ---- Derived operations. ----

// Result position j carries input position order[j].
SparseTensor permute_legs(const SparseTensor& t, std::span<const std::size_t> order);

// Contracts two arbitrary distinct positions by moving q next to p with
// adjacent swaps and applying `contract`.
SparseTensor contract_legs(const SparseTensor& t, std::size_t p, std::size_t q);

// Tensor product followed by contraction of each (a-leg, b-leg) pair, computed
// without materializing the product. Remaining legs of a come first, then b's.
SparseTensor contract_product(const SparseTensor& a, const SparseTensor& b,
                              std::span<const std::pair<std::size_t, std::size_t>> pairs);

// Contracts several disjoint leg pairs of one tensor at once.
SparseTensor trace_legs(const SparseTensor& t, std::span<const std::pair<std::size_t, std::size_t>> pairs);

// The group action on values: every tuple is mapped entrywise by g.
SparseTensor relabel(const SparseTensor& t, const Permutation& g);

}  // namespace skeinlab
