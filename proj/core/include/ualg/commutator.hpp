#ifndef UALG_COMMUTATOR_HPP_
#define UALG_COMMUTATOR_HPP_

#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"

namespace ualg {

/// Labelings of the k-cube {0,1}^k by elements of an algebra.  A vertex
/// eps is encoded as a k-bit integer with coordinate 1 most significant,
/// so (eps,0) and (eps,1) are the adjacent integers 2t, 2t+1.
namespace cube {
inline int dim_size(int k) { return 1 << k; }
/// Face generator g_j[a0,a1]: constant a_u on the face F_j(u).
std::vector<int> face_labeling(int k, int j, int a0, int a1);
}  // namespace cube

/// The (beta_1..beta_k)-matrix algebra: subuniverse of A^(2^k) generated
/// by all face labelings g_j[a0,a1] with a0 beta_j a1.
TupleSet matrix_algebra(const FiniteAlgebra& alg,
                        const std::vector<Partition>& betas,
                        std::size_t cap = kDefaultClosureCap);

/// Higher commutator [beta_1,...,beta_k], as a least-fixpoint over the
/// matrix algebra.
Partition higher_commutator(const FiniteAlgebra& alg,
                            const std::vector<Partition>& betas,
                            std::size_t cap = kDefaultClosureCap);

/// Largest rho with [rho,beta] = 0.
Partition centralizer(const FiniteAlgebra& alg, const Partition& beta,
                      std::size_t cap = kDefaultClosureCap);

struct NilpotenceResult {
  bool nilpotent = false;
  std::vector<Partition> series;  // gamma_1 = alpha, gamma_{i+1} = [alpha, gamma_i]
};

NilpotenceResult is_nilpotent(const FiniteAlgebra& alg, const Partition& alpha,
                              std::size_t cap = kDefaultClosureCap);

/// [alpha,...,alpha] with k+1 alphas equals the identity partition.
bool is_k_supernilpotent(const FiniteAlgebra& alg, const Partition& alpha,
                         int k, std::size_t cap = kDefaultClosureCap);

/// Largest allowed commutator dimension for this universe size.
int max_commutator_dim(int universe_size);

}  // namespace ualg

#endif  // UALG_COMMUTATOR_HPP_
