// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion exercises the library end to end against
// independently derived expectations.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ualg/builtins.hpp"
#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/construct.hpp"
#include "ualg/json_io.hpp"
#include "ualg/smp.hpp"
#include "ualg/supernil.hpp"
#include "ualg/tct.hpp"

using namespace ualg;

namespace {

#define REQ(cond, text)        \
  do {                         \
    if (!(cond)) {             \
      msg = (text);            \
      return false;            \
    }                          \
  } while (0)

std::vector<FiniteAlgebra> corpus() {
  std::vector<FiniteAlgebra> out = builtins::binary_on_two();
  out.push_back(builtins::z4g());
  out.push_back(builtins::z4s());
  out.push_back(builtins::klein());
  out.push_back(builtins::a2());
  return out;
}

// Congruences alpha with at most three classes, i.e. |A/alpha| <= 3.
std::vector<Partition> small_quotient_congruences(const FiniteAlgebra& a) {
  std::vector<Partition> out;
  for (const Partition& alpha : con_lattice(a))
    if (alpha.num_classes() <= 3) out.push_back(alpha);
  return out;
}

ConstructedAlgebra construction(const FiniteAlgebra& a, const Partition& alpha) {
  auto [q, hom] = quotient(a, alpha);
  return construct_c(hom);
}

bool relations_equal(const Relation& a, const Relation& b, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.get(x, y) != b.get(x, y)) return false;
  return true;
}

Term random_term(const Signature& sig, int arity, int depth, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth == 0 || coin(rng) == 0) {
    std::uniform_int_distribution<int> var(0, arity - 1);
    return Term::variable(var(rng));
  }
  std::uniform_int_distribution<int> pick(0, sig.size() - 1);
  int op = pick(rng);
  std::vector<Term> children;
  for (int p = 0; p < sig.at(op).arity; ++p)
    children.push_back(random_term(sig, arity, depth - 1, rng));
  return Term::app(sig.at(op).name, std::move(children));
}

// Evaluates T on C directly and through its coordinate terms on the base.
bool dual_paths_agree(const ConstructedAlgebra& c, const Term& t,
                      const std::vector<int>& env) {
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
  return direct == c.encode(column);
}

// Criterion 1: supernilpotence degree of the Z4 "store" algebra.
bool crit1(std::string& msg) {
  FiniteAlgebra z4s = builtins::z4s();
  Partition one = Partition::total(4);
  REQ(!is_k_supernilpotent(z4s, one, 1), "Z4s reported 1-supernilpotent");
  REQ(is_k_supernilpotent(z4s, one, 2), "Z4s not reported 2-supernilpotent");
  return true;
}

// Criterion 2: Con(C) is order-isomorphic to the interval I(0,alpha) via
// the congruence star map, including meets, joins, and 2-/3-permutability.
bool crit2(std::string& msg) {
  for (const FiniteAlgebra& a : corpus()) {
    std::vector<Partition> lat = con_lattice(a);
    for (const Partition& alpha : small_quotient_congruences(a)) {
      ConstructedAlgebra c = construction(a, alpha);
      const int nc = c.carrier_size();
      std::vector<Partition> interval = interval_below(lat, alpha);
      std::vector<Partition> stars;
      for (const Partition& beta : interval) stars.push_back(star_congruence(c, beta));

      std::set<std::vector<int>> star_set;
      for (const Partition& s : stars) star_set.insert(s.labels());
      REQ(star_set.size() == stars.size(),
          a.name() + ": star map not injective on I(0,alpha)");
      std::set<std::vector<int>> con_c;
      for (const Partition& g : con_lattice(c.alg)) con_c.insert(g.labels());
      REQ(star_set == con_c, a.name() + ": star image differs from Con(C)");

      for (size_t i = 0; i < interval.size(); ++i)
        for (size_t j = 0; j < interval.size(); ++j) {
          const Partition &b1 = interval[i], &b2 = interval[j];
          const Partition &s1 = stars[i], &s2 = stars[j];
          REQ(b1.leq(b2) == s1.leq(s2), a.name() + ": star map not an order embedding");
          REQ(star_congruence(c, b1.meet(b2)) == s1.meet(s2),
              a.name() + ": star does not commute with meet");
          REQ(star_congruence(c, join(a, b1, b2)) == join(c.alg, s1, s2),
              a.name() + ": star does not commute with join");
          for (int k = 2; k <= 3; ++k) {
            bool base_perm = relations_equal(relcompose(b1, b2, k),
                                             relcompose(b2, b1, k), a.size());
            bool star_perm =
                relations_equal(relcompose(s1, s2, k), relcompose(s2, s1, k), nc);
            REQ(base_perm == star_perm,
                a.name() + ": " + std::to_string(k) + "-permutability not preserved");
          }
        }
    }
  }
  return true;
}

// Criterion 3: binary and ternary commutators commute with the star map.
bool crit3(std::string& msg) {
  for (const FiniteAlgebra& a : corpus()) {
    std::vector<Partition> lat = con_lattice(a);
    for (const Partition& alpha : small_quotient_congruences(a)) {
      ConstructedAlgebra c = construction(a, alpha);
      std::vector<Partition> interval = interval_below(lat, alpha);
      std::vector<Partition> stars;
      for (const Partition& beta : interval) stars.push_back(star_congruence(c, beta));
      const size_t s = interval.size();
      for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) {
          Partition base = higher_commutator(a, {interval[i], interval[j]});
          Partition starred = higher_commutator(c.alg, {stars[i], stars[j]});
          REQ(star_congruence(c, base) == starred,
              a.name() + ": binary commutator does not commute with star");
        }
      for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j)
          for (size_t k = 0; k < s; ++k) {
            Partition base =
                higher_commutator(a, {interval[i], interval[j], interval[k]});
            Partition starred =
                higher_commutator(c.alg, {stars[i], stars[j], stars[k]});
            REQ(star_congruence(c, base) == starred,
                a.name() + ": ternary commutator does not commute with star");
          }
    }
  }
  return true;
}

// Criterion 4: centralizers commute with the star map whenever defined.
bool crit4(std::string& msg) {
  for (const FiniteAlgebra& a : corpus()) {
    std::vector<Partition> lat = con_lattice(a);
    for (const Partition& alpha : small_quotient_congruences(a)) {
      ConstructedAlgebra c = construction(a, alpha);
      for (const Partition& beta : interval_below(lat, alpha)) {
        Partition rho = centralizer(a, beta);
        if (!rho.leq(alpha)) continue;
        REQ(star_congruence(c, rho) ==
                centralizer(c.alg, star_congruence(c, beta)),
            a.name() + ": centralizer does not commute with star");
      }
    }
  }
  return true;
}

// Criterion 5: dual-path evaluation of random constructed-language terms.
bool crit5(std::string& msg) {
  std::mt19937 rng(5);
  for (const FiniteAlgebra& a : corpus()) {
    for (const Partition& alpha : small_quotient_congruences(a)) {
      ConstructedAlgebra c = construction(a, alpha);
      std::uniform_int_distribution<int> elem(0, c.carrier_size() - 1);
      for (int trial = 0; trial < 1000; ++trial) {
        Term t = random_term(c.alg.signature(), 3, 4, rng);
        std::vector<int> env = {elem(rng), elem(rng), elem(rng)};
        REQ(dual_paths_agree(c, t, env),
            a.name() + ": dual-path evaluation mismatch");
      }
    }
  }
  return true;
}

// Criterion 6: the lifted group Maltsev term x - y + z satisfies the
// Maltsev identities on the Z4 construction, exhaustively.
bool crit6(std::string& msg) {
  FiniteAlgebra z4 = builtins::z4g();
  ConstructedAlgebra c = construction(z4, parse_partition_arg("02|13", 4));
  Term lifted = lift_idempotent(c, parse_term("(+ x0 (+ (- x1) x2))"), 3);
  for (int x = 0; x < c.carrier_size(); ++x)
    for (int y = 0; y < c.carrier_size(); ++y) {
      REQ(eval_term(c.alg, lifted, {y, y, x}) == x, "m(y,y,x) != x");
      REQ(eval_term(c.alg, lifted, {x, y, y}) == x, "m(x,y,y) != x");
    }
  return true;
}

// Criterion 7: C(A/beta, chi/beta) is isomorphic to C(A,chi)/beta*.
bool crit7(std::string& msg) {
  for (const FiniteAlgebra& a : corpus()) {
    std::vector<Partition> lat = con_lattice(a);
    for (const Partition& alpha : small_quotient_congruences(a)) {
      auto [q, hom] = quotient(a, alpha);
      ConstructedAlgebra c = construct_c(hom);
      for (const Partition& beta : interval_below(lat, alpha)) {
        auto [ab, nu] = quotient(a, beta);
        // chi/beta: induced sort map on A/beta (well defined since
        // beta <= ker(chi)).
        std::vector<int> chi_b(ab.size(), -1);
        for (int x = 0; x < a.size(); ++x) chi_b[nu.map[x]] = hom.map[x];
        ConstructedAlgebra cq = construct_c({ab, q, chi_b});
        auto [c_mod, ignore] = quotient(c.alg, star_congruence(c, beta));
        REQ(c_mod.size() == cq.carrier_size(),
            a.name() + ": quotient construction size mismatch");
        REQ(find_isomorphism(cq.alg, c_mod).has_value(),
            a.name() + ": C(A/beta) not isomorphic to C(A)/beta*");
      }
    }
  }
  return true;
}

// Criterion 8: labelled type and characteristic of every prime quotient
// below alpha agree with the starred prime quotient on C.
bool crit8(std::string& msg) {
  for (const FiniteAlgebra& a : corpus()) {
    std::vector<Partition> lat = con_lattice(a);
    for (const Partition& alpha : small_quotient_congruences(a)) {
      ConstructedAlgebra c = construction(a, alpha);
      std::vector<Partition> interval = interval_below(lat, alpha);
      for (const Partition& lo : interval)
        for (const Partition& hi : interval) {
          if (!is_covering_pair(a, lo, hi)) continue;
          TCTType base = classify_type(a, lo, hi);
          TCTType starred =
              classify_type(c.alg, star_congruence(c, lo), star_congruence(c, hi));
          REQ(base.type == starred.type, a.name() + ": type changed under star");
          REQ(base.characteristic == starred.characteristic,
              a.name() + ": characteristic changed under star");
        }
    }
  }
  return true;
}

// Criterion 9: reduction of randomized coherent membership instances
// preserves the answer and produces central instances.
bool crit9(std::string& msg) {
  FiniteAlgebra z4 = builtins::z4g();
  FiniteAlgebra z2 = builtins::z2g();
  std::vector<SimilarityClass> classes = build_k_star({z4, z2});
  REQ(classes.size() == 1, "unexpected class catalog for {Z4, Z2}");

  std::mt19937 rng(9);
  int done = 0, attempts = 0;
  while (done < 200 && attempts < 20000) {
    ++attempts;
    std::uniform_int_distribution<int> nd(3, 6);
    const int n = nd(rng);
    SMPInstance inst;
    for (int j = 0; j < n; ++j) inst.components.push_back(rng() % 2 ? z4 : z2);
    std::uniform_int_distribution<int> gd(2, 4);
    const int g = gd(rng);
    for (int qn = 0; qn < g; ++qn) {
      std::vector<int> t(n);
      for (int j = 0; j < n; ++j)
        t[j] = static_cast<int>(rng() % inst.components[j].size());
      inst.generators.push_back(std::move(t));
    }
    inst.target.resize(n);
    for (int j = 0; j < n; ++j)
      inst.target[j] = static_cast<int>(rng() % inst.components[j].size());
    if (!check_d_coherent(inst, 2).all_ok()) continue;
    ++done;
    ReducedInstance red = reduce_instance(inst, classes, 2);
    REQ(check_d_central(red.instance, 2).all_ok(),
        "reduced instance is not 2-central");
    REQ(smp_oracle(red.instance) == smp_oracle(inst),
        "membership answer changed under reduction");
  }
  REQ(done == 200, "could not sample 200 coherent instances");
  return true;
}

// Criterion 10: the diagonal-algebra identity validator accepts every
// corpus construction and rejects 50 single-entry corruptions.
bool crit10(std::string& msg) {
  std::vector<ConstructedAlgebra> cs;
  for (const FiniteAlgebra& a : corpus())
    for (const Partition& alpha : small_quotient_congruences(a)) {
      ConstructedAlgebra c = construction(a, alpha);
      REQ(check_dalg_identities(c), a.name() + ": identity validator rejected C");
      if (c.carrier_size() >= 2) cs.push_back(std::move(c));
    }

  int corrupted = 0;
  auto corrupt_and_check = [&](const ConstructedAlgebra& c, int op, std::size_t cell,
                               int value) -> bool {
    ConstructedAlgebra bad = c;
    std::vector<std::vector<int>> tables = bad.alg.tables();
    if (tables[op][cell] == value) return true;  // not a corruption
    tables[op][cell] = value;
    bad.alg =
        FiniteAlgebra(bad.alg.name(), bad.alg.size(), bad.alg.signature(), tables);
    ++corrupted;
    return !check_dalg_identities(bad);
  };

  for (const ConstructedAlgebra& c : cs) {
    if (corrupted >= 50) break;
    const int m = c.num_sorts();
    const Signature& sig = c.alg.signature();
    // d at equal arguments: breaks d(x,..,x) = x.
    for (int x = 0; x < c.carrier_size() && corrupted < 50; ++x) {
      std::size_t cell = c.alg.table_index(0, std::vector<int>(m, x));
      REQ(corrupt_and_check(c, 0, cell, (x + 1) % c.carrier_size()),
          c.alg.name() + ": corrupted d table not rejected");
    }
    // Lifted operation, non-output sort coordinate: breaks the projection
    // identity relating f^<...> to d.
    for (int op = 1; op < sig.size() && corrupted < 50; ++op) {
      auto parsed = parse_constructed_op(sig.at(op).name);
      if (!parsed) continue;
      int out = c.index.apply(parsed->first, parsed->second);
      for (int j = 0; j < m && corrupted < 50; ++j) {
        if (j == out || c.sort_elements[j].size() < 2) continue;
        std::vector<int> args(sig.at(op).arity, 0);
        std::size_t cell = c.alg.table_index(op, args);
        std::vector<int> col = c.decode(c.alg.table(op)[cell]);
        int pos = static_cast<int>(std::find(c.sort_elements[j].begin(),
                                             c.sort_elements[j].end(), col[j]) -
                                   c.sort_elements[j].begin());
        col[j] = c.sort_elements[j][(pos + 1) % c.sort_elements[j].size()];
        REQ(corrupt_and_check(c, op, cell, c.encode(col)),
            c.alg.name() + ": corrupted lifted op not rejected");
      }
    }
  }
  REQ(corrupted >= 50, "fewer than 50 corruptions generated");
  return true;
}

// Criterion 11: the decision procedure agrees with the iterated-commutator
// definition and with the cross-check through the construction.
bool crit11(std::string& msg) {
  for (const FiniteAlgebra& a : corpus()) {
    for (const Partition& alpha : con_lattice(a)) {
      SupernilCertificate direct;
      try {
        direct = decide_supernilpotent(a, alpha, false);
      } catch (const validation_error&) {
        continue;  // a prime quotient has unary type; out of scope
      }
      // Iterated commutators for k <= 3 wherever they run: the dimension
      // guard and a matrix-algebra budget mark a k as not runnable.
      const int kmax = std::min(3, max_commutator_dim(a.size()) - 1);
      bool any_true = false, capped = false;
      for (int k = 1; k <= kmax && !any_true && !capped; ++k) {
        try {
          if (is_k_supernilpotent(a, alpha, k, 20000)) any_true = true;
        } catch (const cap_exceeded&) {
          capped = true;
        }
      }
      if (any_true)
        REQ(direct.verdict, a.name() + ": decision disagrees with iterated commutators");
      else if (!capped)
        REQ(!direct.verdict, a.name() + ": decision disagrees with iterated commutators");
      CrossCheckRecord cross = cross_check_via_c(a, alpha, false);
      REQ(cross.verdict == direct.verdict,
          a.name() + ": construction cross-check disagrees");
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* label;
  std::function<bool(std::string&)> run;
  double limit_sec;  // 0 = no limit
};

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  std::vector<Criterion> criteria = {
      {1, "supernilpotence degree of Z4s", crit1, 10.0},
      {2, "congruence lattice correspondence", crit2, 120.0},
      {3, "commutators commute with star", crit3, 600.0},
      {4, "centralizers commute with star", crit4, 0.0},
      {5, "dual-path term evaluation", crit5, 0.0},
      {6, "lifted Maltsev identities", crit6, 0.0},
      {7, "quotient construction isomorphism", crit7, 0.0},
      {8, "prime quotient types under star", crit8, 0.0},
      {9, "membership instance reduction", crit9, 600.0},
      {10, "identity validator vs corruptions", crit10, 0.0},
      {11, "decision procedure consistency", crit11, 0.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string msg;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(msg);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.limit_sec > 0 && sec > c.limit_sec) {
      ok = false;
      msg = "time limit exceeded";
    }
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.label, sec, msg.empty() ? "" : " -- ", msg.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
