#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "skeinlab/petersen.hpp"
#include "skeinlab/skein.hpp"

using namespace skeinlab;
using namespace skeinlab::petersen;

namespace {

const KneserModel& model() {
  static const KneserModel m = build_kneser();
  return m;
}

}  // namespace

TEST_CASE("the Kneser graph and its symmetry") {
  const KneserModel& m = model();
  REQUIRE(m.size() == 10);
  for (Index u = 0; u < 10; ++u) {
    for (Index v = 0; v < 10; ++v) {
      const auto& a = m.vertices[u];
      const auto& b = m.vertices[v];
      const bool disjoint = a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1];
      CHECK(m.adjacent(u, v) == disjoint);
    }
  }
  GraphInvariants inv = graph_invariants(m);
  CHECK(inv.edges == 15);
  CHECK(inv.min_degree == 3);
  CHECK(inv.max_degree == 3);
  CHECK(inv.triangles == 0);
  CHECK(inv.four_cycles == 0);
  CHECK(inv.group_order == 120);
  CHECK(inv.automorphisms);
  CHECK(m.action.order() == 120);
}

TEST_CASE("invariant space dimensions") {
  const std::size_t expected[] = {1, 1, 3, 15, 107};
  for (unsigned n = 0; n <= 4; ++n) {
    CHECK(orbit_count(model().action, n) == expected[n]);
    if (n <= 3) CHECK(oracle::orbit_count_by_enumeration(model().action, n) == expected[n]);
  }
}

TEST_CASE("the two-box basis") {
  TwoBoxBasis basis = two_box_basis(model());
  ModelContext ctx(model().action);
  CHECK(basis.identity == ghz(ctx, 2));
  CHECK(basis.a_gamma.support_size() == 30);
  CHECK(basis.a_gamma_c.support_size() == 60);
  for (const auto* t : {&basis.identity, &basis.a_gamma, &basis.a_gamma_c}) CHECK(is_invariant(ctx, *t));
  std::vector<SparseTensor> span{basis.identity, basis.a_gamma, basis.a_gamma_c};
  CHECK(rank_of_span(span) == 3);
}

TEST_CASE("the molecule is read off the graph") {
  ModelContext ctx(model().action);
  std::size_t visited = 0;
  SparseTensor s = molecule_from_graph(model(), &visited);
  CHECK(s == molecule(ctx));
  CHECK(s.support_size() == 120);
  CHECK(visited > 120);
  std::set<IndexTuple> images;
  for (const auto& [tuple, value] : s.entries()) {
    CHECK(value == 1);
    CHECK(std::set<Index>(tuple.begin(), tuple.end()).size() == 10);
    images.insert(tuple);
  }
  CHECK(images.size() == 120);
}

TEST_CASE("the bridged crossings decompose the transposition") {
  ModelContext ctx(model().action);
  TwoBoxBasis basis = two_box_basis(model());
  CHECK(bridged_crossing(basis.identity) == ghz(ctx, 4));
  CHECK(bridged_crossing(basis.identity) + bridged_crossing(basis.a_gamma) + bridged_crossing(basis.a_gamma_c) ==
        transposition(ctx));
}

TEST_CASE("Petersen identities") {
  Report b1 = verify_b1(model());
  Report b2 = verify_b2(model());
  CHECK(!b1.checks.empty());
  CHECK(!b2.checks.empty());
  for (const auto* report : {&b1, &b2}) {
    for (const auto& c : report->checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
      CHECK(c.residual_support == 0);
    }
  }
}

TEST_CASE("a restricted generation search reaches rank 2") {
  GenerationOptions small;
  small.max_tensor_rank = 2;
  small.max_work_rank = 4;
  GenerationReport r = verify_generation(model(), small);
  CHECK(r.identities.passed());
  CHECK(r.ranks == std::vector<std::size_t>{1, 1, 3});
  CHECK(r.targets == std::vector<std::size_t>{1, 1, 3});
  CHECK(r.stabilized);
  CHECK_FALSE(r.transposition_in_span);

  GenerationOptions starved;
  starved.max_candidates = 10;
  GenerationReport s = verify_generation(model(), starved);
  CHECK(s.budget_exhausted);
  CHECK_FALSE(s.passed());

  GenerationOptions bad;
  bad.max_tensor_rank = 1;
  CHECK_THROWS_AS(verify_generation(model(), bad), InvalidArgument);
}
