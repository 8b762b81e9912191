#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ualg/algebra.hpp"
#include "ualg/builtins.hpp"
#include "ualg/congruence.hpp"
#include "ualg/json_io.hpp"
#include "ualg/partition.hpp"
#include "ualg/term.hpp"

using namespace ualg;

TEST_CASE("partition canonical form and lattice ops") {
  Partition p({5, 5, 7, 7, 9});
  CHECK(p.labels() == std::vector<int>{0, 0, 2, 2, 4});
  CHECK(p.num_classes() == 3);
  CHECK(p.to_block_string() == "01|23|4");
  CHECK(p.related(0, 1));
  CHECK_FALSE(p.related(1, 2));

  Partition q({0, 1, 1, 2, 2});
  CHECK(p.meet(q) == Partition::identity(5));
  CHECK(p.meet(p) == p);
  CHECK(p.meet(Partition::total(5)) == p);
  CHECK(p.join_with(q) == Partition::total(5));
  CHECK(Partition::identity(5).leq(p));
  CHECK(p.leq(Partition::total(5)));
  CHECK_FALSE(p.leq(q));
  CHECK(Partition::kernel({3, 3, 8}) == Partition({0, 0, 2}));
}

TEST_CASE("relation composition") {
  Partition p = parse_partition_arg("02|13", 4);
  Partition q = parse_partition_arg("01|23", 4);
  Relation pq = relcompose(p, q, 2);
  // 0 p 2, 2 q 3, so (0,3) in p o q.
  CHECK(pq.get(0, 3));
  CHECK(relcompose(p, q, 1) == Relation::from_partition(p));
}

TEST_CASE("term parse and print round-trip") {
  Term t = parse_term("(+ x0 (- x1))");
  CHECK(to_string(t) == "(+ x0 (- x1))");
  CHECK(t.min_arity() == 2);
  CHECK_THROWS_AS(parse_term("(+ x0"), validation_error);
  CHECK_THROWS_AS(parse_term("y0"), validation_error);
  CHECK_THROWS_AS(parse_term("(+ x0 x1) extra"), validation_error);
  CHECK(to_string(rename_vars(t, {5, 3})) == "(+ x5 (- x3))");
}

TEST_CASE("algebra validation and table indexing") {
  CHECK_THROWS_AS(Signature({{"f", 0}}), validation_error);
  CHECK_THROWS_AS(Signature({{"f", 1}, {"f", 2}}), validation_error);
  CHECK_THROWS_AS(FiniteAlgebra("bad", 2, Signature({{"f", 2}}), {{0, 1, 0}}),
                  validation_error);
  CHECK_THROWS_AS(FiniteAlgebra("bad", 2, Signature({{"f", 1}}), {{0, 2}}),
                  validation_error);

  // First argument most significant: f(a,b) = a.
  FiniteAlgebra proj("p", 2, Signature({{"f", 2}}), {{0, 0, 1, 1}});
  CHECK(proj.apply("f", {1, 0}) == 1);
  CHECK(proj.apply("f", {0, 1}) == 0);
}

TEST_CASE("term evaluation") {
  FiniteAlgebra z4 = builtins::z4g();
  Term t = parse_term("(+ x0 (- x1))");
  CHECK(eval_term(z4, t, {1, 3}) == 2);
  CHECK(eval_term(z4, t, {0, 1}) == 3);
}

TEST_CASE("subuniverse generation in a power of Z2") {
  FiniteAlgebra z2 = builtins::z2g();
  std::vector<FiniteAlgebra> comps(3, z2);
  TupleSet closed = generate_subuniverse(comps, {{1, 1, 0}, {0, 1, 1}});
  CHECK(closed.size() == 4);
  CHECK(closed.contains({1, 0, 1}));
  CHECK_FALSE(closed.contains({1, 0, 0}));
}

TEST_CASE("product encoding conventions") {
  FiniteAlgebra k = builtins::klein();
  CHECK(k.size() == 4);
  // (a,b) encodes as 2a+b; (1,0)+(0,1) = (1,1).
  CHECK(k.apply("+", {2, 1}) == 3);
  CHECK(product_encode({2, 2}, {1, 0}) == 2);
  CHECK(product_decode({2, 2}, 3) == std::vector<int>{1, 1});
}

TEST_CASE("quotient of Z4 by the even-odd congruence") {
  FiniteAlgebra z4 = builtins::z4g();
  Partition alpha = parse_partition_arg("02|13", 4);
  CHECK(is_congruence(z4, alpha));
  auto [q, hom] = quotient(z4, alpha);
  CHECK(q.size() == 2);
  CHECK(hom.map == std::vector<int>{0, 1, 0, 1});
  CHECK(q.apply("+", {1, 1}) == 0);
  CHECK_FALSE(is_congruence(z4, parse_partition_arg("01|23", 4)));
  CHECK_THROWS_AS(quotient(z4, parse_partition_arg("01|23", 4)), validation_error);
}

TEST_CASE("isomorphism search") {
  FiniteAlgebra z4 = builtins::z4g();
  FiniteAlgebra klein = builtins::klein();
  auto self = find_isomorphism(z4, z4);
  REQUIRE(self.has_value());
  CHECK(is_homomorphism(z4, z4, *self));
  CHECK_FALSE(find_isomorphism(z4, klein).has_value());
  // Z4 has exactly two automorphisms: x and -x.
  CHECK(find_all_isomorphisms(z4, z4).size() == 2);
}

TEST_CASE("subalgebras and HS closure of Z4") {
  FiniteAlgebra z4 = builtins::z4g();
  auto subs = all_subuniverses(z4);
  CHECK(subs.size() == 3);  // {0}, {0,2}, Z4
  FiniteAlgebra even = subalgebra(z4, {0, 2});
  CHECK(even.size() == 2);
  CHECK(even.apply("+", {1, 1}) == 0);  // 2+2=0
  auto hs = hs_closure({z4});
  CHECK(hs.size() == 3);  // sizes 1, 2, 4 up to isomorphism
}

TEST_CASE("principal congruences and lattices") {
  FiniteAlgebra z4 = builtins::z4g();
  CHECK(cg(z4, {{0, 2}}) == parse_partition_arg("02|13", 4));
  CHECK(cg(z4, {{0, 1}}) == Partition::total(4));
  CHECK(con_lattice(z4).size() == 3);
  CHECK(con_lattice(builtins::klein()).size() == 5);
  CHECK(con_lattice(builtins::z4s()).size() == 3);

  auto mono = monolith(z4);
  REQUIRE(mono.has_value());
  CHECK(*mono == parse_partition_arg("02|13", 4));
  CHECK_FALSE(monolith(builtins::klein()).has_value());
  CHECK(monolith(builtins::a2()) == Partition::total(2));

  auto lat = con_lattice(z4);
  CHECK(interval_below(lat, parse_partition_arg("02|13", 4)).size() == 2);
}

TEST_CASE("algebra json round-trip") {
  FiniteAlgebra z4s = builtins::z4s();
  json j = algebra_to_json(z4s);
  FiniteAlgebra back = algebra_from_json(j);
  CHECK(back == z4s);
  CHECK(back.name() == "Z4s");

  Partition p = parse_partition_arg("02|13", 4);
  CHECK(partition_from_json(partition_to_json(p), 4) == p);
  CHECK(parse_partition_arg("identity", 3) == Partition::identity(3));
  CHECK(parse_partition_arg("1", 3) == Partition::total(3));
  CHECK(parse_partition_arg("[0,0,2,2]", 4) == parse_partition_arg("01|23", 4));
  CHECK_THROWS_AS(parse_partition_arg("02|1", 4), validation_error);
}
