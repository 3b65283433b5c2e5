#include <doctest.h>

#include "oracles.hpp"
#include "skeinlab/error.hpp"
#include "skeinlab/groups.hpp"
#include "skeinlab/permgroup.hpp"

using namespace skeinlab;

TEST_CASE("permutation basics") {
  Permutation g = Permutation::from_cycles(4, {{0, 1, 2}});
  CHECK(g(0) == 1);
  CHECK(g(2) == 0);
  CHECK(g(3) == 3);
  CHECK(compose(g, g.inverse()).is_identity());
  CHECK(compose(g, compose(g, g)).is_identity());
  Permutation h = Permutation::from_cycles(4, {{2, 3}});
  CHECK(compose(g, h)(3) == g(h(3)));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), InvalidArgument);
}

TEST_CASE("closure orders") {
  CHECK(oracle::trivial_group(5).order() == 1);
  CHECK(oracle::cyclic_group(5).order() == 5);
  CHECK(oracle::symmetric_group(4).order() == 24);
  CHECK(oracle::symmetric_group(6).order() == 720);
  CHECK(resolve_group("petersen").order() == 120);
  CHECK(resolve_group("petersen").degree() == 10);
}

TEST_CASE("closure lists elements sorted and closed under composition") {
  GroupAction g = oracle::symmetric_group(4);
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  for (const auto& a : g.elements()) {
    for (const auto& b : g.elements()) CHECK(g.contains(compose(a, b)));
  }
}

TEST_CASE("closure rejects bad input") {
  CHECK_THROWS_AS(closure(3, {Permutation::identity(4)}), InvalidArgument);
  CHECK_THROWS_AS(closure(0, {}), InvalidArgument);
  std::vector<Permutation> gens{Permutation::from_cycles(8, {{0, 1}}), Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})};
  CHECK_THROWS_AS(closure(8, gens, 1000), GroupError);
}

TEST_CASE("Burnside count matches explicit orbit enumeration") {
  std::vector<GroupAction> groups{oracle::trivial_group(3), oracle::cyclic_group(4), oracle::symmetric_group(3),
                                  oracle::symmetric_group(4), oracle::cyclic_group(5)};
  for (const auto& g : groups) {
    for (unsigned n = 0; n <= 4; ++n) {
      CHECK(orbit_count(g, n) == Integer(static_cast<unsigned long>(oracle::orbit_count_by_enumeration(g, n))));
    }
  }
  GroupAction pet = resolve_group("petersen");
  for (unsigned n = 0; n <= 4; ++n) {
    CHECK(orbit_count(pet, n) == Integer(static_cast<unsigned long>(oracle::orbit_count_by_enumeration(pet, n))));
  }
}

TEST_CASE("Petersen orbit counts") {
  GroupAction pet = resolve_group("petersen");
  CHECK(orbit_count(pet, 0) == 1);
  CHECK(orbit_count(pet, 1) == 1);
  CHECK(orbit_count(pet, 2) == 3);
  CHECK(orbit_count(pet, 3) == 15);
  CHECK(orbit_count(pet, 4) == 107);
  CHECK(orbit_count(oracle::trivial_group(5), 3) == 125);
}

TEST_CASE("stabilizers and point orbits") {
  GroupAction pet = resolve_group("petersen");
  CHECK(stabilizer(pet, 0).order() == 12);
  CHECK(point_orbit(pet, 3).size() == 10);
  GroupAction c = oracle::cyclic_group(6);
  CHECK(stabilizer(c, 2).order() == 1);
  // Orbit-stabilizer.
  GroupAction s = oracle::symmetric_group(5);
  for (Index p = 0; p < 5; ++p) CHECK(stabilizer(s, p).order() * point_orbit(s, p).size() == s.order());
}

TEST_CASE("act_tuple acts componentwise") {
  Permutation g = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(act_tuple(g, IndexTuple{0, 0, 2}) == IndexTuple{1, 1, 0});
  CHECK_THROWS_AS(act_tuple(g, IndexTuple{3}), InvalidArgument);
}

TEST_CASE("group text format") {
  GroupAction g = parse_group_text("# cyclic group\n4\n1 2 3 0\n");
  CHECK(g.order() == 4);
  CHECK(parse_group_text("3; 1,0,2; 1 2 0").order() == 6);
  CHECK(parse_group_text("5").order() == 1);
  CHECK_THROWS_AS(parse_group_text(""), GroupError);
  CHECK_THROWS_AS(parse_group_text("3\n1 2"), GroupError);
  CHECK_THROWS_AS(parse_group_text("3\n0 0 1"), GroupError);
  CHECK_THROWS_AS(parse_group_text("3\n0 x 1"), GroupError);
}

TEST_CASE("builtin group names") {
  CHECK(resolve_group("sym:1").order() == 1);
  CHECK(resolve_group("sym:2").order() == 2);
  CHECK(resolve_group("sym:5").order() == 120);
  CHECK(resolve_group("cyclic:7").order() == 7);
  CHECK(resolve_group("trivial:4").degree() == 4);
  CHECK(resolve_group("3; 1 2 0").order() == 3);
  CHECK_THROWS_AS(resolve_group("sym:0"), GroupError);
  CHECK_THROWS_AS(resolve_group("sym:x"), GroupError);
  CHECK_THROWS_AS(resolve_group("sym:11"), GroupError);
  CHECK_THROWS_AS(resolve_group("no-such-group"), GroupError);
}
