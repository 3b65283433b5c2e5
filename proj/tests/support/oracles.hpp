#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/dsl.hpp"
#include "skeinlab/permgroup.hpp"
#include "skeinlab/tensor.hpp"

namespace oracle {

using namespace skeinlab;

// Number of G-orbits on n-tuples, by explicit orbit traversal.
std::size_t orbit_count_by_enumeration(const GroupAction& action, unsigned n);

// Rank by textbook Gaussian elimination over the rationals.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

// The tensor of a diagram by summing over all index assignments to wires,
// reading each box entry from its defining formula.
SparseTensor brute_force(const GroupAction& action, const DiagramIR& ir, const Bindings& bindings = {});

// Connected components of the port graph (wires, GHZ boxes, R strands) that
// meet no S leg and no boundary slot, by breadth-first search.
std::size_t closed_components(const DiagramIR& ir);

struct RandomDiagramOptions {
  std::size_t dim = 3;
  std::size_t max_s = 0;
  std::size_t max_r = 3;
  std::size_t max_ghz = 4;
  std::size_t max_ghz_arity = 4;
  std::size_t open_legs = 0;
};

// Random boxes with a uniformly random pairing of their ports.
DiagramIR random_diagram(std::mt19937_64& rng, const RandomDiagramOptions& options);

GroupAction trivial_group(std::size_t d);
GroupAction cyclic_group(std::size_t d);
GroupAction symmetric_group(std::size_t d);

}  // namespace oracle
