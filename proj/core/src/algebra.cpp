#include "ualg/algebra.hpp"

#include "ualg/congruence.hpp"

#include "new_combos.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ualg {

Signature::Signature(std::vector<OpSymbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> names;
  for (const OpSymbol& s : symbols_) {
    if (s.arity < 1) {
      throw validation_error(
          "signature: nullary symbol '" + s.name +
          "'; encode constants as unary constant maps (c -> c')");
    }
    if (!names.insert(s.name).second) {
      throw validation_error("signature: duplicate symbol '" + s.name + "'");
    }
  }
}

int Signature::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (symbols_[i].name == name) return i;
  return -1;
}

FiniteAlgebra::FiniteAlgebra(std::string name, int size, Signature sig,
                             std::vector<std::vector<int>> tables)
    : name_(std::move(name)), size_(size), sig_(std::move(sig)), tables_(std::move(tables)) {
  if (size_ < 1) throw validation_error("algebra: size must be >= 1");
  if (tables_.size() != static_cast<size_t>(sig_.size()))
    throw validation_error("algebra: one table per symbol required");
  for (int op = 0; op < sig_.size(); ++op) {
    size_t expect = 1;
    for (int a = 0; a < sig_.at(op).arity; ++a) expect *= static_cast<size_t>(size_);
    if (tables_[op].size() != expect)
      throw validation_error("algebra: table size mismatch for '" + sig_.at(op).name + "'");
    for (int v : tables_[op])
      if (v < 0 || v >= size_)
        throw validation_error("algebra: table entry out of range for '" + sig_.at(op).name + "'");
  }
}

bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.size_ == b.size_ && a.sig_ == b.sig_ && a.tables_ == b.tables_;
}

std::size_t FiniteAlgebra::table_index(int op, const std::vector<int>& args) const {
  const int k = sig_.at(op).arity;
  if (static_cast<int>(args.size()) != k)
    throw validation_error("apply: arity mismatch for '" + sig_.at(op).name + "'");
  std::size_t idx = 0;
  for (int j = 0; j < k; ++j) {
    if (args[j] < 0 || args[j] >= size_) throw validation_error("apply: argument out of range");
    idx = idx * static_cast<size_t>(size_) + static_cast<size_t>(args[j]);
  }
  return idx;
}

int FiniteAlgebra::apply(int op, const std::vector<int>& args) const {
  return tables_.at(op)[table_index(op, args)];
}

int FiniteAlgebra::apply(const std::string& sym, const std::vector<int>& args) const {
  int op = sig_.index_of(sym);
  if (op < 0) throw validation_error("apply: unknown symbol '" + sym + "'");
  return apply(op, args);
}

int eval_term(const FiniteAlgebra& alg, const Term& t, const std::vector<int>& env) {
  if (t.is_var()) {
    if (t.var >= static_cast<int>(env.size()))
      throw validation_error("eval_term: environment too short");
    int v = env[t.var];
    if (v < 0 || v >= alg.size()) throw validation_error("eval_term: value out of range");
    return v;
  }
  int op = alg.signature().index_of(t.symbol);
  if (op < 0) throw validation_error("eval_term: unknown symbol '" + t.symbol + "'");
  if (static_cast<int>(t.children.size()) != alg.signature().at(op).arity)
    throw validation_error("eval_term: arity mismatch for '" + t.symbol + "'");
  std::vector<int> args(t.children.size());
  for (size_t i = 0; i < t.children.size(); ++i) args[i] = eval_term(alg, t.children[i], env);
  return alg.apply(op, args);
}

TupleSet generate_subuniverse(const std::vector<FiniteAlgebra>& components,
                              const std::set<std::vector<int>>& generators,
                              std::size_t cap) {
  if (components.empty()) throw validation_error("generate_subuniverse: no components");
  const Signature& sig = components.front().signature();
  for (const auto& c : components)
    if (!(c.signature() == sig))
      throw validation_error("generate_subuniverse: components must share one signature");
  const size_t n = components.size();

  TupleSet out;
  out.component_sizes.reserve(n);
  for (const auto& c : components) out.component_sizes.push_back(c.size());

  std::vector<std::vector<int>> elems;
  for (const auto& g : generators) {
    if (g.size() != n) throw validation_error("generate_subuniverse: tuple length mismatch");
    for (size_t j = 0; j < n; ++j)
      if (g[j] < 0 || g[j] >= components[j].size())
        throw validation_error("generate_subuniverse: generator entry out of range");
    if (out.tuples.insert(g).second) elems.push_back(g);
  }

  // Bit-parallel fast path for all-two-element components: tuples become
  // machine integers (bit j = coordinate j) and one operation application
  // reduces to a few mask operations per truth-table pattern.
  bool all_two = n <= 25;
  int max_arity = 0;
  for (const auto& c : components)
    if (c.size() != 2) all_two = false;
  for (int op = 0; op < sig.size(); ++op) max_arity = std::max(max_arity, sig.at(op).arity);
  if (all_two && max_arity <= 8) {
    const std::uint32_t full = (1u << n) - 1;
    auto pack = [&](const std::vector<int>& t) {
      std::uint32_t m = 0;
      for (size_t j = 0; j < n; ++j) m |= static_cast<std::uint32_t>(t[j]) << j;
      return m;
    };
    // vmask[op][pattern]: coordinates whose table maps the pattern to 1.
    std::vector<std::vector<std::uint32_t>> vmask(sig.size());
    for (int op = 0; op < sig.size(); ++op) {
      const int r = sig.at(op).arity;
      vmask[op].assign(1u << r, 0);
      for (std::uint32_t p = 0; p < (1u << r); ++p)
        for (size_t j = 0; j < n; ++j)
          if (components[j].table(op)[p]) vmask[op][p] |= 1u << j;
    }
    std::vector<std::uint32_t> packed;
    std::vector<bool> member(static_cast<size_t>(full) + 1, false);
    for (const auto& e : elems) {
      std::uint32_t m = pack(e);
      if (!member[m]) {
        member[m] = true;
        packed.push_back(m);
      }
    }
    std::vector<std::uint32_t> args(static_cast<size_t>(max_arity));
    for (size_t next = 0; next < packed.size(); ++next) {
      for (int op = 0; op < sig.size(); ++op) {
        const int r = sig.at(op).arity;
        const std::uint32_t* vm = vmask[op].data();
        detail::for_new_combos(r, static_cast<int>(next), [&](const std::vector<int>& idx) {
          for (int p = 0; p < r; ++p) args[p] = packed[idx[p]];
          std::uint32_t res = 0;
          for (std::uint32_t pat = 0; pat < (1u << r); ++pat) {
            if (!vm[pat]) continue;
            std::uint32_t ind = full;
            for (int i = 0; i < r; ++i)
              ind &= ((pat >> (r - 1 - i)) & 1) ? args[i] : ~args[i];
            res |= ind & vm[pat];
          }
          if (!member[res]) {
            member[res] = true;
            if (packed.size() + 1 > cap)
              throw cap_exceeded("generate_subuniverse: closure exceeded cap of " +
                                 std::to_string(cap) + " tuples");
            packed.push_back(res);
          }
        });
      }
    }
    for (std::uint32_t m : packed) {
      std::vector<int> t(n);
      for (size_t j = 0; j < n; ++j) t[j] = (m >> j) & 1;
      out.tuples.insert(std::move(t));
    }
    return out;
  }

  std::vector<int> scratch(n);
  for (size_t next = 0; next < elems.size(); ++next) {
    for (int op = 0; op < sig.size(); ++op) {
      const int r = sig.at(op).arity;
      detail::for_new_combos(r, static_cast<int>(next), [&](const std::vector<int>& idx) {
        std::vector<int> args(r);
        for (size_t j = 0; j < n; ++j) {
          for (int p = 0; p < r; ++p) args[p] = elems[idx[p]][j];
          scratch[j] = components[j].apply(op, args);
        }
        if (out.tuples.insert(scratch).second) {
          if (out.tuples.size() > cap)
            throw cap_exceeded("generate_subuniverse: closure exceeded cap of " +
                               std::to_string(cap) + " tuples");
          elems.push_back(scratch);
        }
      });
    }
  }
  return out;
}

std::vector<int> product_decode(const std::vector<int>& sizes, int code) {
  std::vector<int> t(sizes.size());
  for (size_t i = sizes.size(); i-- > 0;) {
    t[i] = code % sizes[i];
    code /= sizes[i];
  }
  return t;
}

int product_encode(const std::vector<int>& sizes, const std::vector<int>& tuple) {
  int code = 0;
  for (size_t i = 0; i < sizes.size(); ++i) code = code * sizes[i] + tuple[i];
  return code;
}

FiniteAlgebra product(const std::vector<FiniteAlgebra>& algs, std::size_t cap) {
  if (algs.empty()) throw validation_error("product: empty family");
  const Signature& sig = algs.front().signature();
  std::vector<int> sizes;
  std::size_t total = 1;
  for (const auto& a : algs) {
    if (!(a.signature() == sig)) throw validation_error("product: signature mismatch");
    sizes.push_back(a.size());
    total *= static_cast<size_t>(a.size());
    if (total > cap) throw cap_exceeded("product: size exceeds cap");
  }
  const int n = static_cast<int>(total);

  std::vector<std::vector<int>> tables;
  std::string name;
  for (const auto& a : algs) {
    if (!name.empty()) name += "x";
    name += a.name().empty() ? "?" : a.name();
  }
  for (int op = 0; op < sig.size(); ++op) {
    const int r = sig.at(op).arity;
    std::size_t len = 1;
    for (int p = 0; p < r; ++p) {
      len *= static_cast<size_t>(n);
      if (len > cap) throw cap_exceeded("product: table exceeds cap");
    }
    std::vector<int> table(len);
    std::vector<std::vector<int>> decoded(r);
    std::vector<int> codes(r, 0);
    std::vector<int> args(r), result(sizes.size());
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      for (int p = r - 1; p >= 0; --p) {
        codes[p] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (int p = 0; p < r; ++p) decoded[p] = product_decode(sizes, codes[p]);
      for (size_t j = 0; j < sizes.size(); ++j) {
        for (int p = 0; p < r; ++p) args[p] = decoded[p][j];
        result[j] = algs[j].apply(op, args);
      }
      table[idx] = product_encode(sizes, result);
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(name, n, sig, std::move(tables));
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     const std::vector<int>& map) {
  if (map.size() != static_cast<size_t>(a.size())) return false;
  if (!(a.signature() == b.signature())) return false;
  for (int v : map)
    if (v < 0 || v >= b.size()) return false;
  const Signature& sig = a.signature();
  for (int op = 0; op < sig.size(); ++op) {
    const int r = sig.at(op).arity;
    std::vector<int> args(r, 0), mapped(r);
    while (true) {
      for (int p = 0; p < r; ++p) mapped[p] = map[args[p]];
      if (map[a.apply(op, args)] != b.apply(op, mapped)) return false;
      int p = r - 1;
      while (p >= 0 && args[p] == a.size() - 1) args[p--] = 0;
      if (p < 0) break;
      ++args[p];
    }
  }
  return true;
}

void SortedHom::validate() const {
  if (map.size() != static_cast<size_t>(domain.size()))
    throw validation_error("sorted hom: map length mismatch");
  std::vector<bool> hit(codomain.size(), false);
  for (int v : map) {
    if (v < 0 || v >= codomain.size()) throw validation_error("sorted hom: value out of range");
    hit[v] = true;
  }
  for (bool h : hit)
    if (!h) throw validation_error("sorted hom: map not surjective");
  if (!is_homomorphism(domain, codomain, map))
    throw validation_error("sorted hom: map is not a homomorphism");
}

std::vector<std::vector<int>> SortedHom::sorts() const {
  std::vector<std::vector<int>> out(codomain.size());
  for (int a = 0; a < domain.size(); ++a) out[map[a]].push_back(a);
  return out;
}

bool is_congruence(const FiniteAlgebra& alg, const Partition& part) {
  if (part.size() != alg.size()) return false;
  const std::vector<int> cls = part.class_index();
  const int m = part.num_classes();
  const Signature& sig = alg.signature();
  for (int op = 0; op < sig.size(); ++op) {
    const int r = sig.at(op).arity;
    std::size_t len = 1;
    for (int p = 0; p < r; ++p) len *= static_cast<size_t>(m);
    std::vector<int> table(len, -1);
    std::vector<int> args(r, 0);
    while (true) {
      std::size_t idx = 0;
      for (int p = 0; p < r; ++p) idx = idx * m + cls[args[p]];
      int res = cls[alg.apply(op, args)];
      if (table[idx] == -1) {
        table[idx] = res;
      } else if (table[idx] != res) {
        return false;
      }
      int p = r - 1;
      while (p >= 0 && args[p] == alg.size() - 1) args[p--] = 0;
      if (p < 0) break;
      ++args[p];
    }
  }
  return true;
}

std::pair<FiniteAlgebra, SortedHom> quotient(const FiniteAlgebra& alg,
                                             const Partition& part) {
  if (part.size() != alg.size()) throw validation_error("quotient: partition size mismatch");
  if (!is_congruence(alg, part)) throw validation_error("quotient: partition is not a congruence");
  const std::vector<int> cls = part.class_index();
  const int m = part.num_classes();
  // Representative (least element) of each class, by class index.
  std::vector<int> rep(m, -1);
  for (int a = 0; a < alg.size(); ++a)
    if (rep[cls[a]] == -1) rep[cls[a]] = a;

  const Signature& sig = alg.signature();
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < sig.size(); ++op) {
    const int r = sig.at(op).arity;
    std::size_t len = 1;
    for (int p = 0; p < r; ++p) len *= static_cast<size_t>(m);
    std::vector<int> table(len);
    std::vector<int> args(r);
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      for (int p = r - 1; p >= 0; --p) {
        args[p] = rep[rest % m];
        rest /= m;
      }
      table[idx] = cls[alg.apply(op, args)];
    }
    tables.push_back(std::move(table));
  }
  FiniteAlgebra q(alg.name() + "/" + part.to_block_string(), m, sig, std::move(tables));
  SortedHom hom{alg, q, cls};
  return {std::move(q), std::move(hom)};
}

namespace {

bool extend_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                        std::vector<int>& map, std::vector<bool>& used, int next,
                        bool collect_all, std::vector<std::vector<int>>& found) {
  const int n = a.size();
  if (next == n) {
    if (is_homomorphism(a, b, map)) {
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) inv[map[i]] = i;
      if (is_homomorphism(b, a, inv)) {
        found.push_back(map);
        return !collect_all;
      }
    }
    return false;
  }
  for (int img = 0; img < n; ++img) {
    if (used[img]) continue;
    map[next] = img;
    // Prune on operation applications fully inside the assigned prefix.
    bool ok = true;
    const Signature& sig = a.signature();
    for (int op = 0; ok && op < sig.size(); ++op) {
      const int r = sig.at(op).arity;
      std::vector<int> args(r, 0), mapped(r);
      while (ok) {
        bool touches = false, assigned = true;
        for (int p = 0; p < r; ++p) {
          if (args[p] == next) touches = true;
          if (args[p] > next) assigned = false;
        }
        if (touches && assigned) {
          int res = a.apply(op, args);
          if (res <= next) {
            for (int p = 0; p < r; ++p) mapped[p] = map[args[p]];
            if (b.apply(op, mapped) != map[res]) ok = false;
          }
        }
        int p = r - 1;
        while (p >= 0 && args[p] == next) args[p--] = 0;
        if (p < 0) break;
        ++args[p];
      }
    }
    if (ok) {
      used[img] = true;
      if (extend_isomorphism(a, b, map, used, next + 1, collect_all, found)) return true;
      used[img] = false;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> find_all_isomorphisms(const FiniteAlgebra& a,
                                                    const FiniteAlgebra& b) {
  std::vector<std::vector<int>> found;
  if (a.size() != b.size() || !(a.signature() == b.signature())) return found;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  extend_isomorphism(a, b, map, used, 0, /*collect_all=*/true, found);
  return found;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a,
                                                 const FiniteAlgebra& b) {
  if (a.size() != b.size() || !(a.signature() == b.signature())) return std::nullopt;
  std::vector<std::vector<int>> found;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  extend_isomorphism(a, b, map, used, 0, /*collect_all=*/false, found);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<std::vector<int>> all_subuniverses(const FiniteAlgebra& alg, std::size_t cap) {
  const int n = alg.size();
  if (n > 20) throw cap_exceeded("all_subuniverses: universe too large");
  std::set<std::vector<int>> seen;
  // Close every nonempty subset; dedupe.
  const std::uint32_t limit = 1u << n;
  std::vector<FiniteAlgebra> self = {alg};
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::set<std::vector<int>> gens;
    for (int e = 0; e < n; ++e)
      if (mask & (1u << e)) gens.insert({e});
    TupleSet closed = generate_subuniverse(self, gens, cap);
    std::vector<int> sub;
    for (const auto& t : closed.tuples) sub.push_back(t[0]);
    seen.insert(sub);
  }
  return {seen.begin(), seen.end()};
}

FiniteAlgebra subalgebra(const FiniteAlgebra& alg, const std::vector<int>& subuniverse) {
  std::vector<int> elems = subuniverse;
  std::sort(elems.begin(), elems.end());
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(alg.size(), -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;
  const Signature& sig = alg.signature();
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < sig.size(); ++op) {
    const int r = sig.at(op).arity;
    std::size_t len = 1;
    for (int p = 0; p < r; ++p) len *= static_cast<size_t>(m);
    std::vector<int> table(len);
    std::vector<int> args(r);
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      for (int p = r - 1; p >= 0; --p) {
        args[p] = elems[rest % m];
        rest /= m;
      }
      int res = alg.apply(op, args);
      if (pos[res] < 0) throw validation_error("subalgebra: set is not a subuniverse");
      table[idx] = pos[res];
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(alg.name() + "|sub", m, sig, std::move(tables));
}

std::vector<FiniteAlgebra> hs_closure(const std::vector<FiniteAlgebra>& ks, std::size_t cap) {
  std::vector<FiniteAlgebra> candidates;
  for (const auto& alg : ks) {
    for (const auto& sub : all_subuniverses(alg, cap)) {
      FiniteAlgebra s = subalgebra(alg, sub);
      for (const auto& theta : con_lattice(s, cap)) {
        candidates.push_back(quotient(s, theta).first);
        if (candidates.size() > cap) throw cap_exceeded("hs_closure: too many candidates");
      }
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const FiniteAlgebra& x, const FiniteAlgebra& y) {
                     if (x.size() != y.size()) return x.size() < y.size();
                     return x.tables() < y.tables();
                   });
  std::vector<FiniteAlgebra> out;
  for (auto& c : candidates) {
    bool dup = false;
    for (const auto& o : out) {
      if (o.size() == c.size() && find_isomorphism(c, o)) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ualg
