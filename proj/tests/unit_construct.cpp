#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ualg/builtins.hpp"
#include "ualg/construct.hpp"
#include "ualg/congruence.hpp"
#include "ualg/json_io.hpp"

using namespace ualg;

namespace {

ConstructedAlgebra z4_construction() {
  FiniteAlgebra z4 = builtins::z4g();
  auto [q, hom] = quotient(z4, parse_partition_arg("02|13", 4));
  return construct_c(hom);
}

// Direct evaluation on C versus coordinate-term evaluation on the base.
int dual_path_gap(const ConstructedAlgebra& c, const Term& t, const std::vector<int>& env) {
  int direct = eval_term(c.alg, t, env);
  const int m = c.num_sorts();
  std::vector<Term> ts = coordinate_terms(c, t, static_cast<int>(env.size()));
  std::vector<int> base_env(env.size() * m);
  for (size_t j = 0; j < env.size(); ++j) {
    std::vector<int> col = c.decode(env[j]);
    for (int i = 0; i < m; ++i) base_env[j * m + i] = col[i];
  }
  std::vector<int> column(m);
  for (int i = 0; i < m; ++i) column[i] = eval_term(c.base, ts[i], base_env);
  return direct == c.encode(column) ? 0 : 1;
}

Term random_term(const ConstructedAlgebra& c, int arity, int depth, std::mt19937& rng) {
  const Signature& sig = c.alg.signature();
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth == 0 || coin(rng) == 0) {
    std::uniform_int_distribution<int> var(0, arity - 1);
    return Term::variable(var(rng));
  }
  std::uniform_int_distribution<int> pick(0, sig.size() - 1);
  int op = pick(rng);
  std::vector<Term> children;
  for (int p = 0; p < sig.at(op).arity; ++p)
    children.push_back(random_term(c, arity, depth - 1, rng));
  return Term::app(sig.at(op).name, std::move(children));
}

}  // namespace

TEST_CASE("constructed algebra shape for Z4 mod even-odd") {
  ConstructedAlgebra c = z4_construction();
  CHECK(c.num_sorts() == 2);
  CHECK(c.carrier_size() == 4);
  CHECK(c.sort_elements == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  // Signature: d, 4 lifted +, 2 lifted -.
  CHECK(c.alg.signature().size() == 7);
  CHECK(c.alg.signature().at(0).name == "d");
  CHECK(c.alg.signature().at(0).arity == 2);
  CHECK(c.alg.signature().index_of("+^<1,1>") >= 0);
  CHECK(c.alg.signature().index_of("-^<1>") >= 0);

  CHECK(c.encode({0, 1}) == 0);
  CHECK(c.decode(3) == std::vector<int>{2, 3});
  for (int x = 0; x < 4; ++x) CHECK(c.encode(c.decode(x)) == x);

  // d((0,1),(2,3)) = (0,3).
  CHECK(c.alg.apply("d", {c.encode({0, 1}), c.encode({2, 3})}) == c.encode({0, 3}));
  // +^<1,1>((0,1),(2,3)): 1+3=0 lands at sort 0, rest copied from column 1.
  CHECK(c.alg.apply("+^<1,1>", {c.encode({0, 1}), c.encode({2, 3})}) == c.encode({0, 1}));
}

TEST_CASE("degenerate single-sort construction") {
  FiniteAlgebra z4s = builtins::z4s();
  auto [q, hom] = quotient(z4s, Partition::total(4));
  ConstructedAlgebra c = construct_c(hom);
  CHECK(c.num_sorts() == 1);
  CHECK(c.carrier_size() == 4);
  // d is the unary identity and each lifted op matches the base table.
  for (int x = 0; x < 4; ++x) CHECK(c.alg.apply("d", {x}) == x);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(c.alg.apply("b^<0,0>", {x, y}) == z4s.apply("b", {x, y}));
}

TEST_CASE("operation naming round-trips") {
  CHECK(constructed_op_name("+", {0, 1}) == "+^<0,1>");
  auto parsed = parse_constructed_op("+^<0,1>");
  REQUIRE(parsed.has_value());
  CHECK(parsed->first == "+");
  CHECK(parsed->second == std::vector<int>{0, 1});
  CHECK_FALSE(parse_constructed_op("d").has_value());
  CHECK_THROWS_AS(parse_constructed_op("f^<>"), validation_error);
  CHECK_THROWS_AS(parse_constructed_op("plain"), validation_error);
}

TEST_CASE("diagonal-algebra identities hold and detect corruption") {
  ConstructedAlgebra c = z4_construction();
  CHECK(check_dalg_identities(c));

  // Corrupt one entry of d at equal arguments: identity (3) must fail.
  ConstructedAlgebra bad = c;
  std::vector<std::vector<int>> tables = bad.alg.tables();
  std::size_t diag = bad.alg.table_index(0, {1, 1});
  tables[0][diag] = (tables[0][diag] + 1) % bad.carrier_size();
  bad.alg = FiniteAlgebra(bad.alg.name(), bad.alg.size(), bad.alg.signature(), tables);
  CHECK_FALSE(check_dalg_identities(bad));
}

TEST_CASE("star and unstar congruences") {
  ConstructedAlgebra c = z4_construction();
  Partition alpha = parse_partition_arg("02|13", 4);
  CHECK(star_congruence(c, Partition::identity(4)).is_identity());
  CHECK(star_congruence(c, alpha).is_total());
  CHECK_THROWS_AS(star_congruence(c, Partition::total(4)), validation_error);
  CHECK(con_lattice(c.alg).size() == 2);

  for (const Partition& beta : interval_below(con_lattice(c.base), alpha)) {
    Partition starred = star_congruence(c, beta);
    CHECK(is_congruence(c.alg, starred));
    CHECK(unstar_congruence(c, starred) == beta);
  }
}

TEST_CASE("star subuniverse of the alpha-fibered square") {
  ConstructedAlgebra c = z4_construction();
  Partition alpha = parse_partition_arg("02|13", 4);
  TupleSet b;
  b.component_sizes = {4, 4};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (alpha.related(x, y)) b.tuples.insert({x, y});
  TupleSet starred = star_subuniverse(b, {c, c});
  CHECK(starred.size() == 16);  // the full square of the carrier

  TupleSet diag;
  diag.component_sizes = {4, 4};
  for (int x = 0; x < 4; ++x) diag.tuples.insert({x, x});
  TupleSet sdiag = star_subuniverse(diag, {c, c});
  CHECK(sdiag.size() == 4);
  for (const auto& t : sdiag.tuples) CHECK(t[0] == t[1]);
}

TEST_CASE("tilde map pads foreign sorts") {
  ConstructedAlgebra c = z4_construction();
  std::vector<std::vector<int>> paddings = {{0}, {1}};
  CHECK(tilde_map({2}, paddings, {c}) == std::vector<int>{c.encode({2, 1})});
  CHECK(tilde_map({3}, paddings, {c}) == std::vector<int>{c.encode({0, 3})});
  CHECK_THROWS_AS(tilde_map({2}, {{1}, {1}}, {c}), validation_error);
}

TEST_CASE("star endomorphism") {
  ConstructedAlgebra c = z4_construction();
  std::vector<int> psi = {0, 3, 2, 1};  // x -> -x, graph below ker(chi)
  std::vector<int> starred = star_endomorphism(c, psi);
  CHECK(starred[c.encode({0, 1})] == c.encode({0, 3}));
  CHECK(starred[c.encode({2, 3})] == c.encode({2, 1}));
  CHECK(is_homomorphism(c.alg, c.alg, starred));
  // Composition is preserved: psi o psi = id stars to the identity.
  std::vector<int> ident = {0, 1, 2, 3};
  CHECK(star_endomorphism(c, ident) == ident);
  std::vector<int> twice(4);
  for (int x = 0; x < 4; ++x) twice[x] = psi[psi[x]];
  std::vector<int> starred_twice = star_endomorphism(c, twice);
  for (int x = 0; x < 4; ++x) CHECK(starred_twice[x] == starred[starred[x]]);
  // x + 2 is not an endomorphism of the group.
  CHECK_THROWS_AS(star_endomorphism(c, std::vector<int>{2, 3, 0, 1}), validation_error);
  // x -> 2x is an endomorphism but its graph crosses sorts.
  CHECK_THROWS_AS(star_endomorphism(c, std::vector<int>{0, 2, 0, 2}), validation_error);
}

TEST_CASE("coordinate terms of basic shapes") {
  ConstructedAlgebra c = z4_construction();
  auto ts = coordinate_terms(c, Term::variable(1), 3);
  CHECK(to_string(ts[0]) == "x2");
  CHECK(to_string(ts[1]) == "x3");

  Term d = Term::app("d", {Term::variable(0), Term::variable(1)});
  ts = coordinate_terms(c, d, 2);
  CHECK(to_string(ts[0]) == "x0");
  CHECK(to_string(ts[1]) == "x3");
  CHECK(check_condition_i(c.index, ts, 2));

  CHECK_THROWS_AS(coordinate_terms(c, Term::app("nope^<0>", {Term::variable(0)}), 1),
                  validation_error);
}

TEST_CASE("dual-path evaluation on random terms") {
  ConstructedAlgebra c = z4_construction();
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> elem(0, c.carrier_size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    Term t = random_term(c, 3, 4, rng);
    std::vector<int> env = {elem(rng), elem(rng), elem(rng)};
    CHECK(dual_path_gap(c, t, env) == 0);
  }
}

TEST_CASE("lift_term round-trips semantically") {
  ConstructedAlgebra c = z4_construction();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> elem(0, c.carrier_size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    Term t = random_term(c, 2, 3, rng);
    std::vector<Term> ts = coordinate_terms(c, t, 2);
    REQUIRE(check_condition_i(c.index, ts, 2));
    Term lifted = lift_term(c, ts, 2);
    std::vector<Term> ts2 = coordinate_terms(c, lifted, 2);
    // Same base-side evaluation everywhere.
    for (int e0 = 0; e0 < 4; ++e0)
      for (int e1 = 0; e1 < 4; ++e1)
        for (int e2 = 0; e2 < 4; ++e2)
          for (int e3 = 0; e3 < 4; ++e3) {
            std::vector<int> env = {e0, e1, e2, e3};
            for (int i = 0; i < 2; ++i)
              CHECK(eval_term(c.base, ts[i], env) == eval_term(c.base, ts2[i], env));
          }
  }
}

TEST_CASE("lifted Maltsev term satisfies both identities") {
  ConstructedAlgebra c = z4_construction();
  Term maltsev = parse_term("(+ x0 (+ (- x1) x2))");
  Term lifted = lift_idempotent(c, maltsev, 3);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      CHECK(eval_term(c.alg, lifted, {y, y, x}) == x);
      CHECK(eval_term(c.alg, lifted, {x, y, y}) == x);
    }
  // Non-idempotent terms are rejected.
  CHECK_THROWS_AS(lift_idempotent(c, parse_term("(+ x0 x0)"), 1), validation_error);
}

TEST_CASE("constructed sidecar serialization") {
  ConstructedAlgebra c = z4_construction();
  json side = constructed_sidecar_to_json(c);
  CHECK(side.at("base") == "Z4g");
  CHECK(side.at("chi") == json({0, 1, 0, 1}));
  CHECK(side.at("sorts") == json({{0, 2}, {1, 3}}));
}
