#include "ualg/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace ualg {

namespace {

int uf_find(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

Partition cg(const FiniteAlgebra& alg, const std::vector<std::pair<int, int>>& pairs) {
  const int n = alg.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);

  std::deque<std::pair<int, int>> work;
  auto unite = [&](int a, int b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a == b) return;
    parent[std::max(a, b)] = std::min(a, b);
    work.emplace_back(std::min(a, b), std::max(a, b));
  };

  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw validation_error("cg: pair out of range");
    unite(a, b);
  }

  // Close under unary polynomial translations: for each newly merged pair
  // (a,b), each operation, each argument slot, and each choice of the other
  // arguments, merge f(..a..) with f(..b..).
  const Signature& sig = alg.signature();
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (int op = 0; op < sig.size(); ++op) {
      const int r = sig.at(op).arity;
      std::vector<int> args(r, 0);
      for (int slot = 0; slot < r; ++slot) {
        // Enumerate the other r-1 arguments.
        std::fill(args.begin(), args.end(), 0);
        while (true) {
          args[slot] = a;
          int fa = alg.apply(op, args);
          args[slot] = b;
          int fb = alg.apply(op, args);
          if (fa != fb) unite(fa, fb);
          int p = r - 1;
          while (p >= 0 && (p == slot || args[p] == n - 1)) {
            if (p != slot) args[p] = 0;
            --p;
          }
          if (p < 0) break;
          ++args[p];
        }
      }
    }
  }

  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = uf_find(parent, i);
  return Partition(std::move(labels));
}

std::vector<Partition> con_lattice(const FiniteAlgebra& alg, std::size_t cap) {
  const int n = alg.size();
  std::set<Partition> found;
  found.insert(Partition::identity(n));
  // Principal congruences.
  std::vector<Partition> principals;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Partition p = cg(alg, {{a, b}});
      if (found.insert(p).second) principals.push_back(p);
    }
  // Join closure.
  std::vector<Partition> work(found.begin(), found.end());
  for (size_t next = 0; next < work.size(); ++next) {
    for (const Partition& p : principals) {
      Partition j = work[next].join_with(p);
      if (found.insert(j).second) {
        work.push_back(j);
        if (found.size() > cap) throw cap_exceeded("con_lattice: too many congruences");
      }
    }
  }
  return {found.begin(), found.end()};
}

Partition join(const FiniteAlgebra& alg, const Partition& p, const Partition& q) {
  if (p.size() != alg.size() || q.size() != alg.size())
    throw validation_error("join: size mismatch");
  return p.join_with(q);
}

std::optional<Partition> monolith(const FiniteAlgebra& alg) {
  // The monolith, if it exists, is the minimum nontrivial principal
  // congruence (every atom is principal).
  const int n = alg.size();
  std::vector<Partition> principals;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Partition p = cg(alg, {{a, b}});
      if (!p.is_identity()) principals.push_back(std::move(p));
    }
  if (principals.empty()) return std::nullopt;
  for (const Partition& cand : principals) {
    bool below_all = true;
    for (const Partition& other : principals)
      if (!cand.leq(other)) {
        below_all = false;
        break;
      }
    if (below_all) return cand;
  }
  return std::nullopt;
}

std::vector<Partition> interval_below(const std::vector<Partition>& lat,
                                      const Partition& top) {
  std::vector<Partition> out;
  for (const Partition& p : lat)
    if (p.leq(top)) out.push_back(p);
  return out;
}

}  // namespace ualg
