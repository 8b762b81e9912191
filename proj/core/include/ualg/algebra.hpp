#ifndef UALG_ALGEBRA_HPP_
#define UALG_ALGEBRA_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ualg/partition.hpp"
#include "ualg/signature.hpp"
#include "ualg/term.hpp"

namespace ualg {

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

/// Finite algebra on {0..n-1} with flat row-major operation tables.
/// Table index of (a_1..a_k) is sum a_j * n^(k-j): first argument most
/// significant.
class FiniteAlgebra {
public:
  FiniteAlgebra() = default;
  FiniteAlgebra(std::string name, int size, Signature sig,
                std::vector<std::vector<int>> tables);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int size() const { return size_; }
  const Signature& signature() const { return sig_; }
  const std::vector<std::vector<int>>& tables() const { return tables_; }
  const std::vector<int>& table(int op) const { return tables_.at(op); }

  std::size_t table_index(int op, const std::vector<int>& args) const;
  int apply(int op, const std::vector<int>& args) const;
  int apply(const std::string& sym, const std::vector<int>& args) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&);

private:
  std::string name_;
  int size_ = 1;
  Signature sig_;
  std::vector<std::vector<int>> tables_;
};

int eval_term(const FiniteAlgebra& alg, const Term& t,
              const std::vector<int>& env);

/// Set of tuples in a product of finite universes.
struct TupleSet {
  std::vector<int> component_sizes;
  std::set<std::vector<int>> tuples;

  bool contains(const std::vector<int>& t) const { return tuples.count(t) > 0; }
  std::size_t size() const { return tuples.size(); }

  friend bool operator==(const TupleSet&, const TupleSet&) = default;
};

/// Least subuniverse of the product of `components` containing `generators`,
/// by worklist closure under all basic operations applied coordinatewise.
TupleSet generate_subuniverse(const std::vector<FiniteAlgebra>& components,
                              const std::set<std::vector<int>>& generators,
                              std::size_t cap = kDefaultClosureCap);

/// Direct product with tuples encoded as mixed-radix integers, first
/// component most significant.
FiniteAlgebra product(const std::vector<FiniteAlgebra>& algs,
                      std::size_t cap = kDefaultClosureCap);

std::vector<int> product_decode(const std::vector<int>& sizes, int code);
int product_encode(const std::vector<int>& sizes, const std::vector<int>& tuple);

/// Surjective homomorphism chi: domain -> codomain given by an element map.
struct SortedHom {
  FiniteAlgebra domain;
  FiniteAlgebra codomain;
  std::vector<int> map;  // length domain.size(), values < codomain.size()

  void validate() const;  // surjectivity + homomorphism property
  Partition kernel() const { return Partition::kernel(map); }
  /// Elements of the kernel class D^(i) = map^-1(i), ascending.
  std::vector<std::vector<int>> sorts() const;
};

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     const std::vector<int>& map);

/// Quotient by a congruence; classes are numbered by least element,
/// ascending.  Returns the quotient algebra and the natural hom.
std::pair<FiniteAlgebra, SortedHom> quotient(const FiniteAlgebra& alg,
                                             const Partition& part);

bool is_congruence(const FiniteAlgebra& alg, const Partition& part);

/// Some bijection that is a homomorphism both ways, first in lex order of
/// the image sequence, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a,
                                                 const FiniteAlgebra& b);

/// All isomorphisms a -> b, in lex order of the image sequence.
std::vector<std::vector<int>> find_all_isomorphisms(const FiniteAlgebra& a,
                                                    const FiniteAlgebra& b);

/// All subuniverses (as sorted element lists; nonempty).
std::vector<std::vector<int>> all_subuniverses(const FiniteAlgebra& alg,
                                               std::size_t cap = kDefaultClosureCap);

/// Subalgebra on a subuniverse, elements renumbered by ascending value.
FiniteAlgebra subalgebra(const FiniteAlgebra& alg,
                         const std::vector<int>& subuniverse);

/// All quotients of all subalgebras of members of ks, up to isomorphism,
/// in a deterministic order (by size, then first-found).
std::vector<FiniteAlgebra> hs_closure(const std::vector<FiniteAlgebra>& ks,
                                      std::size_t cap = kDefaultClosureCap);

}  // namespace ualg

#endif  // UALG_ALGEBRA_HPP_
