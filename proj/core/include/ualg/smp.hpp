#ifndef UALG_SMP_HPP_
#define UALG_SMP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/construct.hpp"

namespace ualg {

/// Subpower membership instance: is `target` in the subalgebra of
/// components[0] x ... x components[n-1] generated by `generators`?
struct SMPInstance {
  std::vector<FiniteAlgebra> components;
  std::vector<std::vector<int>> generators;
  std::vector<int> target;

  void validate() const;
};

bool smp_oracle(const SMPInstance& inst, std::size_t cap = kDefaultClosureCap);

struct ConditionReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

struct CoherenceReport {
  ConditionReport size;        // (i)
  ConditionReport components;  // (ii) or (ii)'
  ConditionReport subdirect;   // (iii)
  ConditionReport graphs;      // (iv); unused for d-centrality
  bool all_ok() const {
    return size.ok && components.ok && subdirect.ok && graphs.ok;
  }
};

CoherenceReport check_d_coherent(const SMPInstance& inst, int d,
                                 std::size_t cap = kDefaultClosureCap);
CoherenceReport check_d_central(const SMPInstance& inst, int d,
                                std::size_t cap = kDefaultClosureCap);

/// A similarity class of subdirectly irreducible algebras with abelian
/// monolith, keyed by (iso type of S/(0:mu_S), monolith characteristic),
/// together with the constructed reduced algebras.
struct SimilarityClass {
  std::vector<FiniteAlgebra> members;        // the algebras S
  std::vector<Partition> centralizers;       // (0:mu_S), aligned with members
  FiniteAlgebra reference_quotient;          // the fixed I_l on {0..m-1}
  int prime = 0;                             // monolith characteristic
  std::vector<ConstructedAlgebra> star_algebras;  // C(S,chi), iso-deduped
};

std::vector<SimilarityClass> build_k_star(const std::vector<FiniteAlgebra>& ks,
                                          std::size_t cap = kDefaultClosureCap);

struct ReducedInstance {
  std::size_t class_index = 0;
  std::vector<ConstructedAlgebra> components;
  SMPInstance instance;  // over the constructed components
  std::vector<std::vector<int>> paddings;  // d^(i), tuples of the original product
};

/// The input reduction: maps a d-coherent instance to an equivalent
/// d-central instance over the matching class's constructed algebras.
ReducedInstance reduce_instance(const SMPInstance& inst,
                                const std::vector<SimilarityClass>& classes,
                                int d, std::size_t cap = kDefaultClosureCap);

struct HypothesisReport {
  bool holds = true;
  struct Entry {
    FiniteAlgebra algebra;
    Partition centralizer;
    bool supernilpotent = false;
  };
  std::vector<Entry> entries;
};

/// For every SI algebra in HS(ks) with abelian monolith, decides whether
/// the centralizer of the monolith is supernilpotent.
HypothesisReport check_hypothesis_snilp_centralizers(
    const std::vector<FiniteAlgebra>& ks, std::size_t cap = kDefaultClosureCap);

}  // namespace ualg

#endif  // UALG_SMP_HPP_
