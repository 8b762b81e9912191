#include "ualg/commutator.hpp"

#include <string>

namespace ualg {

namespace cube {

std::vector<int> face_labeling(int k, int j, int a0, int a1) {
  if (j < 1 || j > k) throw validation_error("face_labeling: coordinate out of range");
  std::vector<int> values(dim_size(k));
  // Coordinate j of vertex eps is bit (k - j), coordinate 1 most significant.
  const int bit = k - j;
  for (int eps = 0; eps < dim_size(k); ++eps)
    values[eps] = ((eps >> bit) & 1) ? a1 : a0;
  return values;
}

}  // namespace cube

int max_commutator_dim(int universe_size) { return universe_size <= 2 ? 4 : 3; }

namespace {

void check_matrix_pre(const FiniteAlgebra& alg, const std::vector<Partition>& betas) {
  const int k = static_cast<int>(betas.size());
  if (k < 1) throw validation_error("matrix_algebra: need at least one congruence");
  if (k > max_commutator_dim(alg.size()))
    throw cap_exceeded("matrix_algebra: dimension " + std::to_string(k) +
                       " exceeds cap for universe size " + std::to_string(alg.size()));
  for (const Partition& b : betas) {
    if (b.size() != alg.size()) throw validation_error("matrix_algebra: partition size mismatch");
    if (!is_congruence(alg, b))
      throw validation_error("matrix_algebra: partition is not a congruence");
  }
}

}  // namespace

TupleSet matrix_algebra(const FiniteAlgebra& alg, const std::vector<Partition>& betas,
                        std::size_t cap) {
  check_matrix_pre(alg, betas);
  const int k = static_cast<int>(betas.size());
  std::set<std::vector<int>> gens;
  for (int j = 1; j <= k; ++j) {
    for (int a0 = 0; a0 < alg.size(); ++a0)
      for (int a1 = 0; a1 < alg.size(); ++a1)
        if (betas[j - 1].related(a0, a1)) gens.insert(cube::face_labeling(k, j, a0, a1));
  }
  std::vector<FiniteAlgebra> components(cube::dim_size(k), alg);
  return generate_subuniverse(components, gens, cap);
}

Partition higher_commutator(const FiniteAlgebra& alg, const std::vector<Partition>& betas,
                            std::size_t cap) {
  TupleSet m = matrix_algebra(alg, betas, cap);
  const int k = static_cast<int>(betas.size());
  const int pairs = cube::dim_size(k) / 2;

  Partition gamma = Partition::identity(alg.size());
  std::vector<std::pair<int, int>> forced;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& f : m.tuples) {
      bool premise = true;
      for (int t = 0; t + 1 < pairs; ++t)
        if (!gamma.related(f[2 * t], f[2 * t + 1])) {
          premise = false;
          break;
        }
      if (premise && !gamma.related(f[2 * pairs - 2], f[2 * pairs - 1])) {
        forced.emplace_back(f[2 * pairs - 2], f[2 * pairs - 1]);
        changed = true;
      }
    }
    if (changed) gamma = cg(alg, forced);
  }
  return gamma;
}

Partition centralizer(const FiniteAlgebra& alg, const Partition& beta, std::size_t cap) {
  if (!is_congruence(alg, beta)) throw validation_error("centralizer: not a congruence");
  Partition acc = Partition::identity(alg.size());
  for (const Partition& rho : con_lattice(alg, cap)) {
    if (higher_commutator(alg, {rho, beta}, cap).is_identity()) acc = acc.join_with(rho);
  }
  if (!higher_commutator(alg, {acc, beta}, cap).is_identity())
    throw consistency_error("centralizer: join of centralizing congruences does not centralize");
  return acc;
}

NilpotenceResult is_nilpotent(const FiniteAlgebra& alg, const Partition& alpha,
                              std::size_t cap) {
  if (!is_congruence(alg, alpha)) throw validation_error("is_nilpotent: not a congruence");
  NilpotenceResult res;
  res.series.push_back(alpha);
  while (true) {
    const Partition& gamma = res.series.back();
    if (gamma.is_identity()) {
      res.nilpotent = true;
      return res;
    }
    Partition next = higher_commutator(alg, {alpha, gamma}, cap);
    if (next == gamma) {
      res.nilpotent = false;
      return res;
    }
    res.series.push_back(std::move(next));
  }
}

bool is_k_supernilpotent(const FiniteAlgebra& alg, const Partition& alpha, int k,
                         std::size_t cap) {
  if (k < 1) throw validation_error("is_k_supernilpotent: k must be >= 1");
  std::vector<Partition> betas(k + 1, alpha);
  return higher_commutator(alg, betas, cap).is_identity();
}

}  // namespace ualg
