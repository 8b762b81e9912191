#ifndef UALG_SUPERNIL_HPP_
#define UALG_SUPERNIL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/commutator.hpp"
#include "ualg/construct.hpp"
#include "ualg/term.hpp"

namespace ualg {

struct PrimeFactorRecord {
  std::vector<Partition> witnesses;  // beta_1..beta_l
  std::vector<int> primes;           // p_1..p_l
};

struct CrossCheckRecord {
  bool verdict = false;
  bool c_nilpotent = false;
  int carrier_size = 0;
  std::optional<PrimeFactorRecord> factorization;  // gamma_i reported unstarred
};

struct SupernilCertificate {
  bool verdict = false;
  std::optional<PrimeFactorRecord> witnesses;  // yes case
  std::string failure;                         // no case: which condition failed
  std::optional<CrossCheckRecord> cross_check;
};

/// Decides supernilpotence of alpha via the nilpotence + prime-power
/// factorization characterization.  The caller asserts that the variety of
/// alg omits type 1; without the flag a necessary-condition check (no
/// type-1 prime quotient of alg itself) must pass or the call throws.
SupernilCertificate decide_supernilpotent(const FiniteAlgebra& alg,
                                          const Partition& alpha,
                                          bool assert_omits_type1,
                                          std::size_t cap = kDefaultClosureCap);

/// Independently re-runs the decision through the constructed algebra
/// C = construct_c(A, chi) with ker(chi) = alpha and direct prime-power
/// factor search on Con(C).  Throws consistency_error on disagreement.
CrossCheckRecord cross_check_via_c(const FiniteAlgebra& alg,
                                   const Partition& alpha,
                                   bool assert_omits_type1,
                                   std::size_t cap = kDefaultClosureCap);

enum class MaltsevStatus { kFound, kNone, kUnknown };

struct MaltsevResult {
  MaltsevStatus status = MaltsevStatus::kNone;
  std::optional<Term> term;
};

/// Searches the ternary term functions (closure of projections in A^(A^3))
/// for t with t(x,x,y) = y and t(x,y,y) = x, tracking a witness term.
MaltsevResult has_maltsev_term(const FiniteAlgebra& alg,
                               std::size_t cap = 1'000'000);

}  // namespace ualg

#endif  // UALG_SUPERNIL_HPP_
