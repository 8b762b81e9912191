#ifndef UALG_SRC_NEW_COMBOS_HPP_
#define UALG_SRC_NEW_COMBOS_HPP_

#include <cstdint>
#include <vector>

namespace ualg::detail {

// Calls fn on every arity-r index tuple over {0..limit} whose maximum is
// exactly limit, without enumerating the full cube: positions in a nonempty
// mask are pinned to limit, the rest range over {0..limit-1}.
template <typename Fn>
void for_new_combos(int arity, int limit, Fn&& fn) {
  std::vector<int> idx(arity);
  for (std::uint32_t mask = 1; mask < (1u << arity); ++mask) {
    // With limit 0 the unpinned positions have no values to range over.
    if (limit == 0 && mask != (1u << arity) - 1) continue;
    for (int p = 0; p < arity; ++p) idx[p] = (mask & (1u << p)) ? limit : 0;
    while (true) {
      fn(idx);
      int p = arity - 1;
      while (p >= 0 && (idx[p] == limit - 1 || (mask & (1u << p)))) {
        if (!(mask & (1u << p))) idx[p] = 0;
        --p;
      }
      if (p < 0) break;
      ++idx[p];
    }
  }
}

}  // namespace ualg::detail

#endif  // UALG_SRC_NEW_COMBOS_HPP_
