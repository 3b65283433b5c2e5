#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skeinlab/error.hpp"
#include "skeinlab/groups.hpp"
#include "skeinlab/model.hpp"

using namespace skeinlab;

TEST_CASE("generators have the defining entries") {
  ModelContext ctx(oracle::symmetric_group(3));
  SparseTensor g = ghz(ctx, 3);
  CHECK(g.support_size() == 3);
  CHECK(g.at(IndexTuple{2, 2, 2}) == 1);
  CHECK(g.at(IndexTuple{2, 2, 1}) == 0);
  SparseTensor r = transposition(ctx);
  CHECK(r.support_size() == 9);
  CHECK(r.at(IndexTuple{0, 1, 0, 1}) == 1);
  CHECK(r.at(IndexTuple{0, 1, 1, 0}) == 0);
  SparseTensor s = molecule(ctx);
  CHECK(s.rank() == 3);
  CHECK(s.support_size() == 6);
  CHECK_THROWS_AS(ghz(ctx, 0), InvalidArgument);
}

TEST_CASE("generators are invariant") {
  for (const char* name : {"trivial:3", "cyclic:4", "sym:4", "petersen"}) {
    ModelContext ctx(resolve_group(name));
    CHECK(is_invariant(ctx, ghz(ctx, 1)));
    CHECK(is_invariant(ctx, ghz(ctx, 4)));
    CHECK(is_invariant(ctx, transposition(ctx)));
    CHECK(is_invariant(ctx, molecule(ctx)));
  }
  ModelContext ctx(oracle::cyclic_group(3));
  CHECK_FALSE(is_invariant(ctx, SparseTensor::basic({0, 1}, 3)));
}

TEST_CASE("orbit sums carry the stabilizer size") {
  ModelContext ctx(oracle::symmetric_group(3));
  SparseTensor t = orbit_sum(ctx, IndexTuple{0, 0});
  // The stabilizer of (0,0) in S3 has order 2.
  CHECK(t.at(IndexTuple{1, 1}) == 2);
  CHECK(t.support_size() == 3);
  SparseTensor u = orbit_sum(ctx, IndexTuple{0, 1, 2});
  CHECK(u == molecule(ctx));
}

TEST_CASE("orbit basis size equals the invariant dimension") {
  for (const char* name : {"trivial:2", "cyclic:3", "cyclic:4", "sym:3", "sym:4", "petersen"}) {
    ModelContext ctx(resolve_group(name));
    for (unsigned n = 0; n <= 3; ++n) {
      auto basis = orbit_basis(ctx, n);
      CHECK(basis.size() == oracle::orbit_count_by_enumeration(ctx.action(), n));
      std::vector<SparseTensor> tensors;
      for (const auto& e : basis) {
        CHECK(is_invariant(ctx, e.tensor));
        CHECK(e.tensor == orbit_sum(ctx, e.representative));
        tensors.push_back(e.tensor);
      }
      CHECK(rank_of_span(tensors) == basis.size());
    }
  }
  ModelContext pet(resolve_group("petersen"));
  CHECK(orbit_basis(pet, 4).size() == 107);
  CHECK_THROWS_AS(orbit_basis(pet, 9), BudgetExceeded);
}

TEST_CASE("orbit coordinates determine invariant tensors") {
  ModelContext ctx(oracle::cyclic_group(4));
  auto basis = orbit_basis(ctx, 2);
  std::vector<IndexTuple> reps;
  for (const auto& e : basis) reps.push_back(e.representative);
  SparseTensor t = orbit_sum(ctx, IndexTuple{0, 2});
  t *= 3;
  t += orbit_sum(ctx, IndexTuple{1, 1});
  auto coords = orbit_coordinates(t, reps);
  SparseTensor rebuilt(2, 4);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    // Each orbit element appears with coefficient = stabilizer size.
    Rational stab = basis[i].tensor.at(basis[i].representative);
    rebuilt += (coords[i] / stab) * basis[i].tensor;
  }
  CHECK(rebuilt == t);
}

TEST_CASE("leg permutations form a homomorphism") {
  ModelContext ctx(oracle::symmetric_group(4));
  std::mt19937_64 rng(1);
  SparseTensor t(4, 4);
  std::uniform_int_distribution<int> v(0, 3), c(-2, 2);
  for (int i = 0; i < 30; ++i) t.add({Index(v(rng)), Index(v(rng)), Index(v(rng)), Index(v(rng))}, c(rng));
  for (const auto& g : ctx.action().elements()) {
    for (const auto& h : {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{1, 2, 3}})}) {
      CHECK(apply_leg_permutation(compose(g, h), t) == apply_leg_permutation(g, apply_leg_permutation(h, t)));
    }
  }
  // pi(g) S = S for g in G, and the symmetrizer multiplies S by |G|.
  SparseTensor s = molecule(ctx);
  for (const auto& g : ctx.action().elements()) CHECK(apply_leg_permutation(g, s) == s);
  auto p = PermutationOperator::group_symmetrizer(ctx);
  SparseTensor expected = s;
  expected *= 24;
  CHECK(p.apply(s) == expected);
}

TEST_CASE("the group symmetrizer is a multiple of an idempotent") {
  for (const char* name : {"cyclic:4", "sym:3"}) {
    ModelContext ctx(resolve_group(name));
    auto p = PermutationOperator::group_symmetrizer(ctx);
    CHECK(compose(p, p) == Rational(static_cast<unsigned long>(ctx.group_order())) * p);
    CHECK(compose(PermutationOperator::identity(ctx.dim()), p) == p);
  }
}

TEST_CASE("orbit sums from the molecule") {
  for (const char* name : {"sym:4", "cyclic:5", "petersen"}) {
    ModelContext ctx(resolve_group(name));
    for (const IndexTuple& rep : {IndexTuple{}, IndexTuple{0}, IndexTuple{1, 3}, IndexTuple{0, 2, 3}}) {
      CHECK(orbit_from_molecule(ctx, rep) == orbit_sum(ctx, rep));
    }
  }
  ModelContext ctx(oracle::symmetric_group(3));
  CHECK_THROWS_AS(orbit_from_molecule(ctx, IndexTuple{1, 1}), InvalidArgument);
  CHECK_THROWS_AS(orbit_from_molecule(ctx, IndexTuple{2, 1}), InvalidArgument);
  CHECK_THROWS_AS(orbit_from_molecule(ctx, IndexTuple{3}), InvalidArgument);
}
