#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skeinlab/rational.hpp"

namespace skeinlab {

// A basis label in {0..d-1}.
using Index = std::uint32_t;
using IndexTuple = std::vector<Index>;

inline constexpr std::size_t kDefaultGroupCap = 10'000'000;

/// A bijection of {0..d-1}, stored by its image sequence.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Index> images);

  static Permutation identity(std::size_t degree);
  // Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Index>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Index operator()(Index point) const { return images_[point]; }
  std::span<const Index> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Index> images_;
};

// (compose(g, h))(i) = g(h(i)).
Permutation compose(const Permutation& g, const Permutation& h);

/// A finite permutation group given by generators, with every element listed
/// in lexicographic order of image sequences.
class GroupAction {
 public:
  GroupAction(std::size_t degree, std::vector<Permutation> generators, std::vector<Permutation> elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& g) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

// Breadth-first closure. Throws InvalidArgument on degree mismatch and
// GroupError("group too large") once more than `cap` elements are found.
GroupAction closure(std::size_t degree, std::vector<Permutation> generators, std::size_t cap = kDefaultGroupCap);

// Componentwise action on values: result[k] = g(t[k]).
IndexTuple act_tuple(const Permutation& g, std::span<const Index> tuple);

// dim of the G-fixed subspace of rank-n tensors, by Burnside's lemma.
Integer orbit_count(const GroupAction& action, unsigned n);

GroupAction stabilizer(const GroupAction& action, Index point);

// The orbit of a single point, sorted.
std::vector<Index> point_orbit(const GroupAction& action, Index point);

// Text format: degree on the first non-empty line, then one generator per line
// as a space-separated image sequence. '#' starts a comment; ';' acts as a line break.
GroupAction parse_group_text(std::string_view text, std::size_t cap = kDefaultGroupCap);

}  // namespace skeinlab
