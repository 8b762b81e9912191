#include "ualg/smp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ualg/commutator.hpp"
#include "ualg/supernil.hpp"
#include "ualg/tct.hpp"

namespace ualg {

void SMPInstance::validate() const {
  if (components.empty()) throw validation_error("smp instance: no components");
  const Signature& sig = components.front().signature();
  for (const auto& c : components)
    if (!(c.signature() == sig))
      throw validation_error("smp instance: components must share one signature");
  const size_t n = components.size();
  auto check_tuple = [&](const std::vector<int>& t, const char* what) {
    if (t.size() != n)
      throw validation_error(std::string("smp instance: ") + what + " length mismatch");
    for (size_t j = 0; j < n; ++j)
      if (t[j] < 0 || t[j] >= components[j].size())
        throw validation_error(std::string("smp instance: ") + what + " entry out of range");
  };
  for (const auto& g : generators) check_tuple(g, "generator");
  check_tuple(target, "target");
}

bool smp_oracle(const SMPInstance& inst, std::size_t cap) {
  inst.validate();
  if (inst.generators.empty()) return false;
  std::set<std::vector<int>> gens(inst.generators.begin(), inst.generators.end());
  return generate_subuniverse(inst.components, gens, cap).contains(inst.target);
}

namespace {

struct ComponentAnalysis {
  Partition mono;         // monolith
  Partition rho;          // (0 : monolith)
  FiniteAlgebra q;        // A / rho
  std::vector<int> nu;    // natural map A -> q
  std::optional<int> characteristic;
};

std::optional<ComponentAnalysis> analyze_component(const FiniteAlgebra& a, std::size_t cap,
                                                   ConditionReport& report, size_t j) {
  auto mono = monolith(a);
  if (!mono) {
    report.fail("component " + std::to_string(j) + " is not subdirectly irreducible");
    return std::nullopt;
  }
  if (!higher_commutator(a, {*mono, *mono}, cap).is_identity()) {
    report.fail("component " + std::to_string(j) + " has a non-abelian monolith");
    return std::nullopt;
  }
  ComponentAnalysis out;
  out.mono = *mono;
  out.rho = centralizer(a, *mono, cap);
  auto [q, hom] = quotient(a, out.rho);
  out.q = std::move(q);
  out.nu = hom.map;
  out.characteristic = atom_characteristic(a, *mono);
  return out;
}

// Condition (iii): restricted closures subdirect, target inside, for all
// index sets of size < bound.
void check_condition_iii(const SMPInstance& inst, int bound, std::size_t cap,
                         ConditionReport& report) {
  const int n = static_cast<int>(inst.components.size());
  std::vector<int> idx;
  // All nonempty subsets of size < bound.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    idx.clear();
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) idx.push_back(j);
    if (static_cast<int>(idx.size()) >= bound) continue;
    std::vector<FiniteAlgebra> comps;
    std::set<std::vector<int>> gens;
    for (int j : idx) comps.push_back(inst.components[j]);
    for (const auto& g : inst.generators) {
      std::vector<int> t;
      for (int j : idx) t.push_back(g[j]);
      gens.insert(std::move(t));
    }
    std::string label;
    for (int j : idx) label += (label.empty() ? "" : ",") + std::to_string(j);
    if (gens.empty()) {
      report.fail("no generators to restrict to {" + label + "}");
      return;
    }
    TupleSet closed = generate_subuniverse(comps, gens, cap);
    for (size_t p = 0; p < idx.size(); ++p) {
      std::set<int> hit;
      for (const auto& t : closed.tuples) hit.insert(t[p]);
      if (static_cast<int>(hit.size()) != comps[p].size()) {
        report.fail("restriction to {" + label + "} is not subdirect at position " +
                    std::to_string(idx[p]));
        break;
      }
    }
    std::vector<int> bt;
    for (int j : idx) bt.push_back(inst.target[j]);
    if (!closed.contains(bt))
      report.fail("target restricted to {" + label + "} is outside the restricted closure");
  }
}

// Condition (iv) between components j1 and j2: the generated binary
// relation on the quotients is the graph of an isomorphism.  Returns the
// function q_{j1} -> q_{j2} when it is.
std::optional<std::vector<int>> quotient_graph(const ComponentAnalysis& c1,
                                               const ComponentAnalysis& c2,
                                               const SMPInstance& inst, size_t j1, size_t j2,
                                               std::size_t cap, ConditionReport* report) {
  std::set<std::vector<int>> gens;
  for (const auto& g : inst.generators)
    gens.insert({c1.nu[g[j1]], c2.nu[g[j2]]});
  auto fail = [&](const std::string& msg) {
    if (report)
      report->fail("quotient relation (" + std::to_string(j1) + "," + std::to_string(j2) +
                   "): " + msg);
  };
  if (gens.empty()) {
    fail("no generators");
    return std::nullopt;
  }
  TupleSet rel = generate_subuniverse({c1.q, c2.q}, gens, cap);
  std::vector<int> fwd(c1.q.size(), -1), bwd(c2.q.size(), -1);
  for (const auto& t : rel.tuples) {
    if (fwd[t[0]] != -1 && fwd[t[0]] != t[1]) {
      fail("not a function");
      return std::nullopt;
    }
    if (bwd[t[1]] != -1 && bwd[t[1]] != t[0]) {
      fail("not injective");
      return std::nullopt;
    }
    fwd[t[0]] = t[1];
    bwd[t[1]] = t[0];
  }
  for (int x = 0; x < c1.q.size(); ++x)
    if (fwd[x] == -1) {
      fail("not total");
      return std::nullopt;
    }
  for (int y = 0; y < c2.q.size(); ++y)
    if (bwd[y] == -1) {
      fail("not surjective");
      return std::nullopt;
    }
  // A bijective subuniverse graph is an isomorphism graph; assert anyway.
  if (!is_homomorphism(c1.q, c2.q, fwd)) {
    fail("graph is not a homomorphism");
    return std::nullopt;
  }
  return fwd;
}

CoherenceReport check_conditions(const SMPInstance& inst, int d, bool central,
                                 std::size_t cap) {
  inst.validate();
  CoherenceReport rep;
  const int n = static_cast<int>(inst.components.size());
  const int bound = std::max(d, 3);
  if (n < bound)
    rep.size.fail("need at least max{d,3} = " + std::to_string(bound) + " components, have " +
                  std::to_string(n));

  std::vector<std::optional<ComponentAnalysis>> analyses;
  for (size_t j = 0; j < inst.components.size(); ++j)
    analyses.push_back(analyze_component(inst.components[j], cap, rep.components, j));

  for (size_t j = 0; j < analyses.size() && rep.components.ok; ++j) {
    const auto& a = analyses[j];
    if (central) {
      // (ii)': central monolith, shared prime characteristic.
      if (!a->rho.is_total())
        rep.components.fail("component " + std::to_string(j) + " monolith is not central");
      if (!a->characteristic)
        rep.components.fail("component " + std::to_string(j) + " has no prime characteristic");
      else if (analyses[0]->characteristic &&
               *a->characteristic != *analyses[0]->characteristic)
        rep.components.fail("component " + std::to_string(j) +
                            " characteristic differs from component 0");
    } else {
      // (ii) similarity surrogate: isomorphic reference quotients and equal
      // characteristic; the graph condition (iv) is checked below.
      if (j > 0 && !find_isomorphism(a->q, analyses[0]->q))
        rep.components.fail("component " + std::to_string(j) +
                            " quotient by the centralizer is not isomorphic to component 0's");
      if (!a->characteristic)
        rep.components.fail("component " + std::to_string(j) + " has no prime characteristic");
      else if (analyses[0]->characteristic &&
               *a->characteristic != *analyses[0]->characteristic)
        rep.components.fail("component " + std::to_string(j) +
                            " characteristic differs from component 0");
    }
  }

  check_condition_iii(inst, bound, cap, rep.subdirect);

  if (!central && rep.components.ok) {
    for (size_t j1 = 0; j1 < analyses.size(); ++j1)
      for (size_t j2 = j1 + 1; j2 < analyses.size(); ++j2)
        quotient_graph(*analyses[j1], *analyses[j2], inst, j1, j2, cap, &rep.graphs);
  }
  return rep;
}

}  // namespace

CoherenceReport check_d_coherent(const SMPInstance& inst, int d, std::size_t cap) {
  return check_conditions(inst, d, /*central=*/false, cap);
}

CoherenceReport check_d_central(const SMPInstance& inst, int d, std::size_t cap) {
  return check_conditions(inst, d, /*central=*/true, cap);
}

std::vector<SimilarityClass> build_k_star(const std::vector<FiniteAlgebra>& ks,
                                          std::size_t cap) {
  std::vector<SimilarityClass> classes;
  for (const FiniteAlgebra& s : hs_closure(ks, cap)) {
    auto mono = monolith(s);
    if (!mono) continue;
    if (!higher_commutator(s, {*mono, *mono}, cap).is_identity()) continue;

    Partition rho = centralizer(s, *mono, cap);
    auto [q, hom] = quotient(s, rho);
    auto characteristic = atom_characteristic(s, *mono);
    if (!characteristic)
      throw consistency_error("build_k_star: abelian monolith without prime characteristic");

    SimilarityClass* cls = nullptr;
    for (auto& existing : classes)
      if (existing.prime == *characteristic &&
          find_isomorphism(q, existing.reference_quotient)) {
        cls = &existing;
        break;
      }
    if (!cls) {
      SimilarityClass fresh;
      fresh.reference_quotient = q;
      fresh.reference_quotient.set_name("I" + std::to_string(classes.size()));
      fresh.prime = *characteristic;
      classes.push_back(std::move(fresh));
      cls = &classes.back();
    }

    cls->members.push_back(s);
    cls->centralizers.push_back(rho);
    // Every surjection S -> I with kernel rho: isomorphisms q -> I
    // composed with the natural map.
    for (const auto& phi : find_all_isomorphisms(q, cls->reference_quotient)) {
      std::vector<int> chi(s.size());
      for (int a = 0; a < s.size(); ++a) chi[a] = phi[hom.map[a]];
      ConstructedAlgebra c = construct_c({s, cls->reference_quotient, chi}, cap);
      bool dup = false;
      for (const auto& have : cls->star_algebras)
        if (find_isomorphism(c.alg, have.alg)) {
          dup = true;
          break;
        }
      if (!dup) {
        // Post-hoc: constructed algebra is SI with central monolith of the
        // class characteristic.
        auto cmono = monolith(c.alg);
        if (!cmono)
          throw consistency_error("build_k_star: constructed algebra is not SI");
        if (!centralizer(c.alg, *cmono, cap).is_total())
          throw consistency_error("build_k_star: constructed monolith is not central");
        auto cchar = atom_characteristic(c.alg, *cmono);
        if (!cchar || *cchar != cls->prime)
          throw consistency_error("build_k_star: constructed characteristic mismatch");
        cls->star_algebras.push_back(std::move(c));
      }
    }
  }
  // Drop classes that collected no members (cannot happen, but keep tidy).
  classes.erase(std::remove_if(classes.begin(), classes.end(),
                               [](const SimilarityClass& c) { return c.members.empty(); }),
                classes.end());
  return classes;
}

ReducedInstance reduce_instance(const SMPInstance& inst,
                                const std::vector<SimilarityClass>& classes, int d,
                                std::size_t cap) {
  CoherenceReport coh = check_d_coherent(inst, d, cap);
  if (!coh.all_ok()) {
    std::string why;
    for (const auto* rep : {&coh.size, &coh.components, &coh.subdirect, &coh.graphs})
      for (const auto& f : rep->failures) why += (why.empty() ? "" : "; ") + f;
    throw validation_error("reduce_instance: input is not d-coherent: " + why);
  }

  const size_t n = inst.components.size();
  std::vector<ComponentAnalysis> analyses;
  {
    ConditionReport scratch;
    for (size_t j = 0; j < n; ++j) {
      auto a = analyze_component(inst.components[j], cap, scratch, j);
      if (!a) throw consistency_error("reduce_instance: coherent component failed analysis");
      analyses.push_back(std::move(*a));
    }
  }

  // The unique class containing all components.
  std::size_t class_index = classes.size();
  for (std::size_t l = 0; l < classes.size(); ++l) {
    if (classes[l].prime != *analyses[0].characteristic) continue;
    if (find_isomorphism(analyses[0].q, classes[l].reference_quotient)) {
      class_index = l;
      break;
    }
  }
  if (class_index == classes.size())
    throw validation_error("reduce_instance: no similarity class covers the components");
  const SimilarityClass& cls = classes[class_index];

  // chi_1 = phi_1 o nu_1 with phi_1 the first isomorphism to the reference
  // quotient; chi_j = phi_1 o iota_{j,1} o nu_j with iota read off the
  // condition-(iv) graph between components j and 1.
  auto phi1 = find_isomorphism(analyses[0].q, cls.reference_quotient);
  if (!phi1) throw consistency_error("reduce_instance: class match lost");
  std::vector<std::vector<int>> chis(n);
  for (size_t j = 0; j < n; ++j) {
    std::vector<int> to_q1(analyses[j].q.size());
    if (j == 0) {
      std::iota(to_q1.begin(), to_q1.end(), 0);
    } else {
      auto iota = quotient_graph(analyses[j], analyses[0], inst, j, 0, cap, nullptr);
      if (!iota) throw consistency_error("reduce_instance: condition (iv) graph vanished");
      to_q1 = *iota;
    }
    chis[j].resize(inst.components[j].size());
    for (int a = 0; a < inst.components[j].size(); ++a)
      chis[j][a] = (*phi1)[to_q1[analyses[j].nu[a]]];
  }

  std::vector<ConstructedAlgebra> comps;
  for (size_t j = 0; j < n; ++j)
    comps.push_back(
        construct_c({inst.components[j], cls.reference_quotient, chis[j]}, cap));

  // Padding representatives: one tuple of the generated subalgebra per sort,
  // found by closing the (at most m) sort values with one representative
  // tuple each.
  const int m = cls.reference_quotient.size();
  std::vector<std::vector<int>> rep_of_sort(m);
  std::vector<bool> have(m, false);
  std::vector<int> order;
  auto sort_of = [&](const std::vector<int>& t) { return chis[0][t[0]]; };
  for (const auto& g : inst.generators) {
    int i = sort_of(g);
    if (!have[i]) {
      have[i] = true;
      rep_of_sort[i] = g;
      order.push_back(i);
    }
  }
  const Signature& sig = inst.components.front().signature();
  for (size_t next = 0; next < order.size(); ++next) {
    for (int op = 0; op < sig.size(); ++op) {
      const int r = sig.at(op).arity;
      std::vector<size_t> pick(r, 0);
      while (true) {
        bool uses_next = false;
        for (int p = 0; p < r; ++p)
          if (pick[p] == next) uses_next = true;
        if (uses_next) {
          std::vector<int> t(n), args(r);
          for (size_t j = 0; j < n; ++j) {
            for (int p = 0; p < r; ++p) args[p] = rep_of_sort[order[pick[p]]][j];
            t[j] = inst.components[j].apply(op, args);
          }
          int i = sort_of(t);
          if (!have[i]) {
            have[i] = true;
            rep_of_sort[i] = std::move(t);
            order.push_back(i);
          }
        }
        int p = r - 1;
        while (p >= 0 && pick[p] == next) pick[p--] = 0;
        if (p < 0) break;
        ++pick[p];
      }
    }
  }
  for (int i = 0; i < m; ++i)
    if (!have[i])
      throw consistency_error("reduce_instance: padding sort " + std::to_string(i) +
                              " unreachable from the generators");

  ReducedInstance out;
  out.class_index = class_index;
  out.paddings = rep_of_sort;
  out.instance.components.reserve(n);
  for (const auto& c : comps) out.instance.components.push_back(c.alg);
  for (const auto& g : inst.generators)
    out.instance.generators.push_back(tilde_map(g, rep_of_sort, comps));
  out.instance.target = tilde_map(inst.target, rep_of_sort, comps);
  out.components = std::move(comps);
  return out;
}

HypothesisReport check_hypothesis_snilp_centralizers(const std::vector<FiniteAlgebra>& ks,
                                                     std::size_t cap) {
  HypothesisReport rep;
  for (const FiniteAlgebra& s : hs_closure(ks, cap)) {
    auto mono = monolith(s);
    if (!mono) continue;
    if (!higher_commutator(s, {*mono, *mono}, cap).is_identity()) continue;
    Partition rho = centralizer(s, *mono, cap);
    SupernilCertificate cert = decide_supernilpotent(s, rho, /*assert_omits_type1=*/false, cap);
    rep.entries.push_back({s, rho, cert.verdict});
    if (!cert.verdict) rep.holds = false;
  }
  return rep;
}

}  // namespace ualg
