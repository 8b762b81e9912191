#ifndef UALG_CONSTRUCT_HPP_
#define UALG_CONSTRUCT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/term.hpp"

namespace ualg {

/// Algebra built from (base, chi) on the product of chi's kernel classes,
/// with the diagonal operation "d" (arity m) and one operation
/// "f^<i1,...,ik>" per base symbol f and sort tuple (i1..ik) in [m]^k.
///
/// Carrier encoding: a column (a^(0),...,a^(m-1)) with a^(i) in sort i is
/// the mixed-radix integer over the positions of a^(i) in sort_elements[i],
/// first sort most significant.
struct ConstructedAlgebra {
  FiniteAlgebra alg;      // the constructed algebra
  FiniteAlgebra base;     // the original A
  FiniteAlgebra index;    // the image algebra I on {0..m-1}
  std::vector<int> chi;   // base element -> sort
  std::vector<std::vector<int>> sort_elements;  // per sort, ascending

  int num_sorts() const { return static_cast<int>(sort_elements.size()); }
  int carrier_size() const { return alg.size(); }

  std::vector<int> decode(int code) const;          // column as base elements
  int encode(const std::vector<int>& column) const; // inverse
};

ConstructedAlgebra construct_c(const SortedHom& chi,
                               std::size_t cap = kDefaultClosureCap);

/// Exhaustively verifies the defining identities of diagonal algebras:
/// d(x,..,x) = x, the m x m diagonal identity, and the two families
/// relating each f^<...> to d.
bool check_dalg_identities(const ConstructedAlgebra& c,
                           std::size_t cap = kDefaultClosureCap);

/// Star-map on congruences below ker(chi): columns are related iff
/// componentwise related in every sort.
Partition star_congruence(const ConstructedAlgebra& c, const Partition& beta);

/// Inverse of star_congruence (recovers beta from beta* by sort projection).
Partition unstar_congruence(const ConstructedAlgebra& c, const Partition& starred);

/// Star-map on subuniverses of a chi-fibered product: B |-> prod_i (B n D^(i)).
/// ctx lists one ConstructedAlgebra per product coordinate (all with the
/// same index algebra I).
TupleSet star_subuniverse(const TupleSet& b,
                          const std::vector<ConstructedAlgebra>& ctx);

/// Padding map: embeds a sort-constant tuple of the fibered product as a
/// tuple of columns, filling foreign sorts with padding tuples.
/// paddings[i] is a tuple of the fibered product lying in D^(i).
std::vector<int> tilde_map(const std::vector<int>& x,
                           const std::vector<std::vector<int>>& paddings,
                           const std::vector<ConstructedAlgebra>& ctx);

/// Columnwise application of an endomorphism whose graph is below ker(chi).
std::vector<int> star_endomorphism(const ConstructedAlgebra& c,
                                   const std::vector<int>& psi);

/// Operation naming for the constructed signature.
std::string constructed_op_name(const std::string& base_symbol,
                                const std::vector<int>& sorts);
/// Parses "f^<i1,...,ik>" / "d"; returns base symbol + sorts, or nullopt for d.
std::optional<std::pair<std::string, std::vector<int>>> parse_constructed_op(
    const std::string& name);

/// Coordinate terms t^(0..m-1) of a constructed-language term T of arity k.
/// Each t^(i) is an mk-ary base-language term; the variable for entry
/// (column j, sort i') has index j*m + i'.
std::vector<Term> coordinate_terms(const ConstructedAlgebra& c, const Term& T,
                                   int term_arity);

/// Evaluates t^(i) on the index algebra at the matrix whose (j,i') entry is
/// i'; condition (i) of term lifting requires the value i.
bool check_condition_i(const FiniteAlgebra& index, const std::vector<Term>& ts,
                       int term_arity);

/// Inverse direction: builds a k-ary constructed-language term whose
/// coordinate terms evaluate like the given mk-ary base terms.
/// Requires check_condition_i.
Term lift_term(const ConstructedAlgebra& c, const std::vector<Term>& ts,
               int term_arity);

/// The breve map: lifts a k-ary idempotent base term to the constructed
/// language (coordinate terms t(x_1^(i),...,x_k^(i))).  Idempotency is
/// verified exhaustively on the base algebra.
Term lift_idempotent(const ConstructedAlgebra& c, const Term& t, int term_arity);

}  // namespace ualg

#endif  // UALG_CONSTRUCT_HPP_
