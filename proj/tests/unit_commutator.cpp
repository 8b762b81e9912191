#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ualg/builtins.hpp"
#include "ualg/commutator.hpp"
#include "ualg/json_io.hpp"

using namespace ualg;

TEST_CASE("cube face labelings") {
  // k=2, coordinate 1 most significant.
  CHECK(cube::face_labeling(2, 1, 5, 7) == std::vector<int>{5, 5, 7, 7});
  CHECK(cube::face_labeling(2, 2, 5, 7) == std::vector<int>{5, 7, 5, 7});
  CHECK(cube::face_labeling(1, 1, 0, 1) == std::vector<int>{0, 1});
}

TEST_CASE("matrix algebra contents") {
  FiniteAlgebra z2 = builtins::z2g();
  TupleSet m1 = matrix_algebra(z2, {Partition::total(2)});
  CHECK(m1.size() == 4);  // all of Z2^2

  FiniteAlgebra z4 = builtins::z4g();
  TupleSet m2 = matrix_algebra(z4, {Partition::total(4), Partition::total(4)});
  CHECK(m2.contains({0, 0, 2, 2}));
  CHECK(m2.contains({0, 2, 0, 2}));

  // Identity congruences generate only constant labelings' closure.
  TupleSet mid = matrix_algebra(z4, {Partition::identity(4), Partition::identity(4)});
  for (const auto& f : mid.tuples)
    CHECK((f[0] == f[1] && f[1] == f[2] && f[2] == f[3]));
}

TEST_CASE("binary commutator on groups and semilattices") {
  FiniteAlgebra z4 = builtins::z4g();
  Partition one = Partition::total(4);
  CHECK(higher_commutator(z4, {one, one}).is_identity());

  FiniteAlgebra z4s = builtins::z4s();
  CHECK(higher_commutator(z4s, {one, one}) == parse_partition_arg("02|13", 4));
  CHECK(higher_commutator(z4s, {one, one, one}).is_identity());

  FiniteAlgebra a2 = builtins::a2();
  CHECK(higher_commutator(a2, {Partition::total(2), Partition::total(2)}) ==
        Partition::total(2));

  // [beta, 0] = 0 always.
  CHECK(higher_commutator(z4s, {one, Partition::identity(4)}).is_identity());
}

TEST_CASE("commutator bounded by last argument") {
  for (const FiniteAlgebra& alg : builtins::binary_on_two()) {
    for (const Partition& b1 : con_lattice(alg))
      for (const Partition& b2 : con_lattice(alg)) {
        CHECK(higher_commutator(alg, {b1, b2}).leq(b2));
      }
  }
}

TEST_CASE("monotonicity in each argument on Z4s") {
  FiniteAlgebra z4s = builtins::z4s();
  auto lat = con_lattice(z4s);
  for (const Partition& b1 : lat)
    for (const Partition& b1p : lat) {
      if (!b1.leq(b1p)) continue;
      for (const Partition& b2 : lat) {
        CHECK(higher_commutator(z4s, {b1, b2}).leq(higher_commutator(z4s, {b1p, b2})));
        CHECK(higher_commutator(z4s, {b2, b1}).leq(higher_commutator(z4s, {b2, b1p})));
      }
    }
}

TEST_CASE("centralizers") {
  FiniteAlgebra z4 = builtins::z4g();
  CHECK(centralizer(z4, parse_partition_arg("02|13", 4)).is_total());
  FiniteAlgebra z4s = builtins::z4s();
  CHECK(centralizer(z4s, parse_partition_arg("02|13", 4)).is_total());
  CHECK(centralizer(z4s, Partition::identity(4)).is_total());
  FiniteAlgebra a2 = builtins::a2();
  CHECK(centralizer(a2, Partition::total(2)).is_identity());
}

TEST_CASE("nilpotence series") {
  FiniteAlgebra z4 = builtins::z4g();
  auto r1 = is_nilpotent(z4, Partition::total(4));
  CHECK(r1.nilpotent);
  CHECK(r1.series.size() == 2);

  FiniteAlgebra z4s = builtins::z4s();
  auto r2 = is_nilpotent(z4s, Partition::total(4));
  CHECK(r2.nilpotent);
  REQUIRE(r2.series.size() == 3);
  CHECK(r2.series[1] == parse_partition_arg("02|13", 4));

  auto r3 = is_nilpotent(builtins::a2(), Partition::total(2));
  CHECK_FALSE(r3.nilpotent);
  CHECK(r3.series.back() == Partition::total(2));
}

TEST_CASE("supernilpotence degree of Z4 variants") {
  FiniteAlgebra z4s = builtins::z4s();
  CHECK_FALSE(is_k_supernilpotent(z4s, Partition::total(4), 1));
  CHECK(is_k_supernilpotent(z4s, Partition::total(4), 2));
  CHECK(is_k_supernilpotent(builtins::z4g(), Partition::total(4), 1));
  CHECK(is_k_supernilpotent(z4s, Partition::identity(4), 1));
}

TEST_CASE("dimension caps") {
  CHECK(max_commutator_dim(2) == 4);
  CHECK(max_commutator_dim(4) == 3);
  FiniteAlgebra z4 = builtins::z4g();
  std::vector<Partition> four(4, Partition::total(4));
  CHECK_THROWS_AS(higher_commutator(z4, four), cap_exceeded);
  FiniteAlgebra z2 = builtins::z2g();
  std::vector<Partition> four2(4, Partition::total(2));
  CHECK(higher_commutator(z2, four2).is_identity());
}
