#ifndef UALG_CONGRUENCE_HPP_
#define UALG_CONGRUENCE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"

namespace ualg {

/// Least congruence of alg containing the given pairs, by union-find
/// closure under unary polynomial translations.
Partition cg(const FiniteAlgebra& alg,
             const std::vector<std::pair<int, int>>& pairs);

/// All congruences, canonically sorted (by label array).
std::vector<Partition> con_lattice(const FiniteAlgebra& alg,
                                   std::size_t cap = kDefaultClosureCap);

/// Congruence join (equals the partition join for congruences).
Partition join(const FiniteAlgebra& alg, const Partition& p, const Partition& q);

/// Unique minimal nontrivial congruence if alg is subdirectly irreducible.
std::optional<Partition> monolith(const FiniteAlgebra& alg);

/// Congruences of `lat` lying below top (inclusive of identity and top).
std::vector<Partition> interval_below(const std::vector<Partition>& lat,
                                      const Partition& top);

}  // namespace ualg

#endif  // UALG_CONGRUENCE_HPP_
