#ifndef UALG_TCT_HPP_
#define UALG_TCT_HPP_

#include <optional>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"

namespace ualg {

/// All r-ary polynomial functions (term functions of the constant
/// expansion), as flat value tables of length size^r.
std::vector<std::vector<int>> polynomial_functions(const FiniteAlgebra& alg,
                                                   int arity,
                                                   std::size_t cap = 200'000);

/// Unary polynomial closure: identity + one-slot translations, closed
/// under composition.
std::vector<std::vector<int>> unary_polynomials(const FiniteAlgebra& alg,
                                                std::size_t cap = 200'000);

struct MinimalSetData {
  std::vector<int> idempotent;          // e with e o e = e
  std::vector<int> universe;            // U = e(A), ascending
  std::vector<std::vector<int>> traces; // N = U n (a/theta) with delta|N != theta|N
};

/// <delta,theta>-minimal sets for a covering pair delta < theta.
std::vector<MinimalSetData> minimal_sets(const FiniteAlgebra& alg,
                                         const Partition& delta,
                                         const Partition& theta,
                                         std::size_t cap = 200'000);

bool is_covering_pair(const FiniteAlgebra& alg, const Partition& delta,
                      const Partition& theta);

struct TCTType {
  int type = 0;                  // 1..5
  std::optional<int> characteristic;  // prime, present iff type == 2
};

TCTType classify_type(const FiniteAlgebra& alg, const Partition& delta,
                      const Partition& theta, std::size_t cap = 200'000);

/// Characteristic of an atom theta (the prime quotient <0,theta>); nullopt
/// unless the type is 2.
std::optional<int> atom_characteristic(const FiniteAlgebra& alg,
                                       const Partition& theta);

}  // namespace ualg

#endif  // UALG_TCT_HPP_
