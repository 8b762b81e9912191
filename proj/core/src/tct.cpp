#include "ualg/tct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ualg/commutator.hpp"

#include "new_combos.hpp"

namespace ualg {

std::vector<std::vector<int>> polynomial_functions(const FiniteAlgebra& alg, int arity,
                                                   std::size_t cap) {
  if (arity < 1) throw validation_error("polynomial_functions: arity must be >= 1");
  const int n = alg.size();
  std::size_t len = 1;
  for (int p = 0; p < arity; ++p) {
    len *= static_cast<size_t>(n);
    if (len > cap) throw cap_exceeded("polynomial_functions: table length exceeds cap");
  }

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> elems;
  auto push = [&](std::vector<int> t) {
    if (seen.insert(t).second) {
      if (seen.size() > cap) throw cap_exceeded("polynomial_functions: clone exceeds cap");
      elems.push_back(std::move(t));
    }
  };

  // Seeds: projections and constants.
  for (int v = 0; v < arity; ++v) {
    std::vector<int> t(len);
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      int val = 0;
      for (int p = arity - 1; p >= 0; --p) {
        if (p == v) val = static_cast<int>(rest % n);
        rest /= n;
      }
      t[idx] = val;
    }
    push(std::move(t));
  }
  for (int cst = 0; cst < n; ++cst) push(std::vector<int>(len, cst));

  const Signature& sig = alg.signature();
  std::vector<int> scratch(len);
  for (size_t next = 0; next < elems.size(); ++next) {
    for (int op = 0; op < sig.size(); ++op) {
      const int r = sig.at(op).arity;
      const int* table = alg.table(op).data();
      detail::for_new_combos(r, static_cast<int>(next), [&](const std::vector<int>& idx) {
        // Pointwise application with direct table indexing.
        for (std::size_t q = 0; q < len; ++q) {
          std::size_t pos = 0;
          for (int p = 0; p < r; ++p)
            pos = pos * static_cast<size_t>(n) + static_cast<size_t>(elems[idx[p]][q]);
          scratch[q] = table[pos];
        }
        if (!seen.count(scratch)) push(scratch);
      });
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> unary_polynomials(const FiniteAlgebra& alg, std::size_t cap) {
  return polynomial_functions(alg, 1, cap);
}

bool is_covering_pair(const FiniteAlgebra& alg, const Partition& delta,
                      const Partition& theta) {
  if (!is_congruence(alg, delta) || !is_congruence(alg, theta)) return false;
  if (!(delta.leq(theta)) || delta == theta) return false;
  for (const Partition& mid : con_lattice(alg))
    if (delta.leq(mid) && mid.leq(theta) && mid != delta && mid != theta) return false;
  return true;
}

namespace {

bool separates(const Partition& delta, const Partition& theta, const std::vector<int>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (theta.related(set[i], set[j]) && !delta.related(set[i], set[j])) return true;
  return false;
}

}  // namespace

std::vector<MinimalSetData> minimal_sets(const FiniteAlgebra& alg, const Partition& delta,
                                         const Partition& theta, std::size_t cap) {
  if (!is_covering_pair(alg, delta, theta))
    throw validation_error("minimal_sets: not a covering pair");
  const int n = alg.size();
  std::vector<std::vector<int>> unary = unary_polynomials(alg, cap);

  // Idempotents whose image separates theta from delta, keyed by image.
  std::map<std::vector<int>, std::vector<int>> image_to_e;
  for (const auto& e : unary) {
    bool idem = true;
    for (int x = 0; x < n; ++x)
      if (e[e[x]] != e[x]) {
        idem = false;
        break;
      }
    if (!idem) continue;
    std::set<int> img(e.begin(), e.end());
    std::vector<int> u(img.begin(), img.end());
    if (!separates(delta, theta, u)) continue;
    if (!image_to_e.count(u)) image_to_e[u] = e;
  }

  // Inclusion-minimal images.
  std::vector<MinimalSetData> out;
  for (const auto& [u, e] : image_to_e) {
    bool minimal = true;
    for (const auto& [v, e2] : image_to_e) {
      if (v.size() < u.size() && std::includes(u.begin(), u.end(), v.begin(), v.end())) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    MinimalSetData data;
    data.idempotent = e;
    data.universe = u;
    for (const auto& cls : theta.classes()) {
      std::vector<int> trace;
      for (int x : u)
        if (std::find(cls.begin(), cls.end(), x) != cls.end()) trace.push_back(x);
      if (trace.size() >= 2 && separates(delta, theta, trace)) data.traces.push_back(trace);
    }
    out.push_back(std::move(data));
  }
  return out;
}

namespace {

// Induced algebra on a trace N modulo delta restricted to N, from all
// polynomials of arity <= 3 preserving N.
//
// Rather than enumerating full polynomial tables, works with their
// restrictions to N^r: restriction at fixed argument tuples is a
// homomorphism from the clone closure, so the restricted clone is the
// pointwise closure of restricted projections and constants.  A restricted
// table with range inside N is always induced by an N-preserving
// polynomial (compose with the idempotent fixing the minimal set that
// yielded N), so filtering on the range is exact.
FiniteAlgebra induced_minimal_algebra(const FiniteAlgebra& alg, const Partition& delta,
                                      const std::vector<int>& trace, std::size_t cap) {
  const int n = alg.size();
  const size_t nn = trace.size();
  // delta classes within the trace, numbered by least element.
  std::vector<int> cls(nn);
  std::vector<int> rep;      // class -> representative element of A
  std::vector<int> rep_pos;  // class -> representative's position in trace
  for (size_t i = 0; i < nn; ++i) {
    int found = -1;
    for (size_t j = 0; j < i; ++j)
      if (delta.related(trace[i], trace[j])) {
        found = cls[j];
        break;
      }
    if (found < 0) {
      found = static_cast<int>(rep.size());
      rep.push_back(trace[i]);
      rep_pos.push_back(static_cast<int>(i));
    }
    cls[i] = found;
  }
  const int s = static_cast<int>(rep.size());
  std::vector<int> elem_class(n, -1);
  for (size_t i = 0; i < nn; ++i) elem_class[trace[i]] = cls[i];

  const Signature& sig = alg.signature();
  std::set<std::pair<int, std::vector<int>>> tables;  // (arity, induced table)
  for (int r = 1; r <= 3; ++r) {
    std::size_t qlen = 1;
    for (int p = 0; p < r; ++p) qlen *= nn;

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> elems;
    auto push = [&](std::vector<int> t) {
      if (seen.insert(t).second) {
        if (seen.size() > cap)
          throw cap_exceeded("induced_minimal_algebra: restricted clone exceeds cap");
        elems.push_back(std::move(t));
      }
    };
    for (int v = 0; v < r; ++v) {
      std::vector<int> t(qlen);
      std::size_t stride = 1;
      for (int p = v + 1; p < r; ++p) stride *= nn;
      for (std::size_t idx = 0; idx < qlen; ++idx)
        t[idx] = trace[(idx / stride) % nn];
      push(std::move(t));
    }
    for (int cst = 0; cst < n; ++cst) push(std::vector<int>(qlen, cst));

    std::vector<int> scratch(qlen);
    for (size_t next = 0; next < elems.size(); ++next) {
      for (int op = 0; op < sig.size(); ++op) {
        const int k = sig.at(op).arity;
        const int* table = alg.table(op).data();
        detail::for_new_combos(k, static_cast<int>(next), [&](const std::vector<int>& idx) {
          for (std::size_t q = 0; q < qlen; ++q) {
            std::size_t pos = 0;
            for (int p = 0; p < k; ++p)
              pos = pos * static_cast<size_t>(n) + static_cast<size_t>(elems[idx[p]][q]);
            scratch[q] = table[pos];
          }
          if (!seen.count(scratch)) push(scratch);
        });
      }
    }

    std::size_t slen = 1;
    for (int p = 0; p < r; ++p) slen *= static_cast<size_t>(s);
    for (const auto& t : seen) {
      bool inside = true;
      for (std::size_t q = 0; q < qlen && inside; ++q)
        if (elem_class[t[q]] < 0) inside = false;
      if (!inside) continue;
      std::vector<int> table(slen);
      for (std::size_t q = 0; q < slen; ++q) {
        std::size_t rest = q;
        std::size_t idx = 0;
        std::vector<int> cargs(r);
        for (int p = r - 1; p >= 0; --p) {
          cargs[p] = static_cast<int>(rest % s);
          rest /= s;
        }
        for (int p = 0; p < r; ++p) idx = idx * nn + rep_pos[cargs[p]];
        table[q] = elem_class[t[idx]];
      }
      tables.emplace(r, std::move(table));
    }
  }

  std::vector<OpSymbol> symbols;
  std::vector<std::vector<int>> op_tables;
  int counter = 0;
  for (const auto& [r, table] : tables) {
    symbols.push_back({"p" + std::to_string(counter++), r});
    op_tables.push_back(table);
  }
  return FiniteAlgebra("M", s, Signature(std::move(symbols)), std::move(op_tables));
}

bool essentially_unary(const std::vector<int>& table, int arity, int s) {
  for (int dep = 0; dep < arity; ++dep) {
    // Does the table depend only on slot dep?
    bool only = true;
    std::vector<int> args(arity, 0);
    while (only) {
      std::size_t idx = 0;
      for (int p = 0; p < arity; ++p) idx = idx * s + args[p];
      // Compare with all args outside dep zeroed.
      std::size_t base = 0;
      for (int p = 0; p < arity; ++p) base = base * s + (p == dep ? args[p] : 0);
      if (table[idx] != table[base]) only = false;
      int p = arity - 1;
      while (p >= 0 && args[p] == s - 1) args[p--] = 0;
      if (p < 0) break;
      ++args[p];
    }
    if (only) return true;
  }
  return false;
}

bool is_maltsev_table(const std::vector<int>& table, int s) {
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      if (table[(a * s + a) * s + b] != b) return false;
      if (table[(a * s + b) * s + b] != a) return false;
    }
  return true;
}

}  // namespace

TCTType classify_type(const FiniteAlgebra& alg, const Partition& delta,
                      const Partition& theta, std::size_t cap) {
  std::vector<MinimalSetData> mins = minimal_sets(alg, delta, theta, cap);
  if (mins.empty() || mins.front().traces.empty())
    throw consistency_error("classify_type: no minimal set or trace found");
  const std::vector<int>& trace = mins.front().traces.front();
  if (trace.size() > 4) throw cap_exceeded("classify_type: trace larger than supported");

  FiniteAlgebra m = induced_minimal_algebra(alg, delta, trace, cap);
  const int s = m.size();
  const Signature& sig = m.signature();

  bool all_unary = true;
  for (int op = 0; op < sig.size() && all_unary; ++op)
    if (!essentially_unary(m.table(op), sig.at(op).arity, s)) all_unary = false;
  if (all_unary) return {1, std::nullopt};

  for (int op = 0; op < sig.size(); ++op) {
    if (sig.at(op).arity != 3) continue;
    if (is_maltsev_table(m.table(op), s)) {
      bool abelian =
          higher_commutator(m, {Partition::total(s), Partition::total(s)}).is_identity();
      if (abelian) {
        // Characteristic: the unique prime dividing |M| (a prime power).
        int size = s, p = 2;
        while (size % p != 0) ++p;
        return {2, p};
      }
      return {3, std::nullopt};
    }
  }

  if (s != 2)
    throw consistency_error("classify_type: non-Maltsev minimal algebra of size != 2");
  bool has_meet = false, has_join = false;
  for (int op = 0; op < sig.size(); ++op) {
    if (sig.at(op).arity != 2) continue;
    const std::vector<int>& t = m.table(op);
    if (t == std::vector<int>{0, 0, 0, 1}) has_meet = true;
    if (t == std::vector<int>{0, 1, 1, 1}) has_join = true;
  }
  if (has_meet && has_join) return {4, std::nullopt};
  if (has_meet || has_join) return {5, std::nullopt};
  throw consistency_error("classify_type: classification fell through");
}

std::optional<int> atom_characteristic(const FiniteAlgebra& alg, const Partition& theta) {
  TCTType t = classify_type(alg, Partition::identity(alg.size()), theta);
  if (t.type == 2) return t.characteristic;
  return std::nullopt;
}

}  // namespace ualg
