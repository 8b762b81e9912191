#include "ualg/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ualg {

std::vector<int> ConstructedAlgebra::decode(int code) const {
  const int m = num_sorts();
  std::vector<int> column(m);
  for (int i = m - 1; i >= 0; --i) {
    const int s = static_cast<int>(sort_elements[i].size());
    column[i] = sort_elements[i][code % s];
    code /= s;
  }
  return column;
}

int ConstructedAlgebra::encode(const std::vector<int>& column) const {
  const int m = num_sorts();
  if (static_cast<int>(column.size()) != m)
    throw validation_error("constructed encode: column length mismatch");
  int code = 0;
  for (int i = 0; i < m; ++i) {
    const auto& elems = sort_elements[i];
    auto it = std::lower_bound(elems.begin(), elems.end(), column[i]);
    if (it == elems.end() || *it != column[i])
      throw validation_error("constructed encode: entry not in its sort");
    code = code * static_cast<int>(elems.size()) + static_cast<int>(it - elems.begin());
  }
  return code;
}

std::string constructed_op_name(const std::string& base_symbol, const std::vector<int>& sorts) {
  std::ostringstream os;
  os << base_symbol << "^<";
  for (size_t i = 0; i < sorts.size(); ++i) {
    if (i) os << ',';
    os << sorts[i];
  }
  os << '>';
  return os.str();
}

std::optional<std::pair<std::string, std::vector<int>>> parse_constructed_op(
    const std::string& name) {
  if (name == "d") return std::nullopt;
  auto caret = name.rfind("^<");
  if (caret == std::string::npos || name.empty() || name.back() != '>')
    throw validation_error("parse_constructed_op: malformed name '" + name + "'");
  std::string base = name.substr(0, caret);
  std::string list = name.substr(caret + 2, name.size() - caret - 3);
  std::vector<int> sorts;
  std::istringstream is(list);
  std::string part;
  while (std::getline(is, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(),
                                     [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw validation_error("parse_constructed_op: malformed sort list in '" + name + "'");
    sorts.push_back(std::stoi(part));
  }
  if (sorts.empty())
    throw validation_error("parse_constructed_op: empty sort list in '" + name + "'");
  return std::make_pair(std::move(base), std::move(sorts));
}

ConstructedAlgebra construct_c(const SortedHom& chi, std::size_t cap) {
  chi.validate();
  const FiniteAlgebra& base = chi.domain;
  const FiniteAlgebra& index = chi.codomain;
  const int m = index.size();

  ConstructedAlgebra c;
  c.base = base;
  c.index = index;
  c.chi = chi.map;
  c.sort_elements = chi.sorts();

  std::size_t carrier = 1;
  for (const auto& sort : c.sort_elements) {
    carrier *= sort.size();
    if (carrier > cap) throw cap_exceeded("construct_c: carrier exceeds cap");
  }
  const int n = static_cast<int>(carrier);

  std::vector<OpSymbol> symbols;
  symbols.push_back({"d", m});
  const Signature& bsig = base.signature();
  // For each base symbol f and each sort tuple, one lifted operation;
  // sort tuples in ascending mixed-radix order.
  std::vector<std::pair<int, std::vector<int>>> lifted;  // (base op, sorts)
  for (int op = 0; op < bsig.size(); ++op) {
    const int k = bsig.at(op).arity;
    std::vector<int> sorts(k, 0);
    while (true) {
      symbols.push_back({constructed_op_name(bsig.at(op).name, sorts), k});
      lifted.emplace_back(op, sorts);
      int p = k - 1;
      while (p >= 0 && sorts[p] == m - 1) sorts[p--] = 0;
      if (p < 0) break;
      ++sorts[p];
    }
  }

  std::vector<std::vector<int>> tables;
  {  // d: diagonal of the column matrix.
    std::size_t len = 1;
    for (int p = 0; p < m; ++p) {
      len *= static_cast<size_t>(n);
      if (len > cap) throw cap_exceeded("construct_c: d table exceeds cap");
    }
    std::vector<int> table(len);
    std::vector<int> codes(m), result(m);
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      for (int p = m - 1; p >= 0; --p) {
        codes[p] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (int i = 0; i < m; ++i) result[i] = c.decode(codes[i])[i];
      table[idx] = c.encode(result);
    }
    tables.push_back(std::move(table));
  }
  for (const auto& [op, sorts] : lifted) {
    const int k = bsig.at(op).arity;
    const int out_sort = index.apply(op, sorts);
    std::size_t len = 1;
    for (int p = 0; p < k; ++p) {
      len *= static_cast<size_t>(n);
      if (len > cap) throw cap_exceeded("construct_c: operation table exceeds cap");
    }
    std::vector<int> table(len);
    std::vector<int> codes(k), fargs(k);
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      for (int p = k - 1; p >= 0; --p) {
        codes[p] = static_cast<int>(rest % n);
        rest /= n;
      }
      std::vector<int> result = c.decode(codes[0]);
      for (int p = 0; p < k; ++p) fargs[p] = c.decode(codes[p])[sorts[p]];
      result[out_sort] = base.apply(op, fargs);
      table[idx] = c.encode(result);
    }
    tables.push_back(std::move(table));
  }

  c.alg = FiniteAlgebra("C(" + base.name() + ")", n, Signature(std::move(symbols)),
                        std::move(tables));
  return c;
}

namespace {

// d_l(x, u) = d(u,..,u,x,u,..,u) with x in position l (0-based).
int d_at(const ConstructedAlgebra& c, int l, int x, int u) {
  std::vector<int> args(c.num_sorts(), u);
  args[l] = x;
  return c.alg.apply(0, args);
}

template <typename Fn>
bool for_all_tuples(int arity, int n, Fn&& check) {
  std::vector<int> t(arity, 0);
  while (true) {
    if (!check(t)) return false;
    int p = arity - 1;
    while (p >= 0 && t[p] == n - 1) t[p--] = 0;
    if (p < 0) return true;
    ++t[p];
  }
}

}  // namespace

bool check_dalg_identities(const ConstructedAlgebra& c, std::size_t cap) {
  const int m = c.num_sorts();
  const int n = c.carrier_size();
  const int d = 0;  // d is the first symbol by construction

  auto powN = [&](int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) {
      r *= static_cast<size_t>(n);
      if (r > cap) throw cap_exceeded("check_dalg_identities: work exceeds cap");
    }
    return r;
  };

  // (3) d(x,..,x) = x.
  for (int x = 0; x < n; ++x)
    if (c.alg.apply(d, std::vector<int>(m, x)) != x) return false;

  // (4) d of row diagonals equals the diagonal of the m x m matrix.
  powN(m * m);
  bool ok = for_all_tuples(m * m, n, [&](const std::vector<int>& t) {
    std::vector<int> rows(m), diag(m);
    for (int r = 0; r < m; ++r) {
      std::vector<int> row(t.begin() + r * m, t.begin() + (r + 1) * m);
      rows[r] = c.alg.apply(d, row);
      diag[r] = t[r * m + r];
    }
    return c.alg.apply(d, rows) == c.alg.apply(d, diag);
  });
  if (!ok) return false;

  const Signature& sig = c.alg.signature();
  for (int op = 1; op < sig.size(); ++op) {
    auto parsed = parse_constructed_op(sig.at(op).name);
    if (!parsed) throw consistency_error("check_dalg_identities: unexpected d symbol");
    const std::vector<int>& sorts = parsed->second;
    const int k = sig.at(op).arity;
    const int out = c.index.apply(c.index.signature().index_of(parsed->first), sorts);

    // (6) d_j(g(x..), y) = d_j(x1, y) for j != out.
    powN(k + 1);
    ok = for_all_tuples(k + 1, n, [&](const std::vector<int>& t) {
      std::vector<int> xs(t.begin(), t.begin() + k);
      const int y = t[k];
      const int gx = c.alg.apply(op, xs);
      for (int j = 0; j < m; ++j) {
        if (j == out) continue;
        if (d_at(c, j, gx, y) != d_at(c, j, xs[0], y)) return false;
      }
      return true;
    });
    if (!ok) return false;

    // (5) d_out(g(x..), y) = d_out(g(d_{i1}(x1,v1),..,d_{ik}(xk,vk)), y).
    powN(2 * k + 1);
    ok = for_all_tuples(2 * k + 1, n, [&](const std::vector<int>& t) {
      std::vector<int> xs(t.begin(), t.begin() + k);
      std::vector<int> vs(t.begin() + k, t.begin() + 2 * k);
      const int y = t[2 * k];
      const int lhs = d_at(c, out, c.alg.apply(op, xs), y);
      std::vector<int> mixed(k);
      for (int p = 0; p < k; ++p) mixed[p] = d_at(c, sorts[p], xs[p], vs[p]);
      const int rhs = d_at(c, out, c.alg.apply(op, mixed), y);
      return lhs == rhs;
    });
    if (!ok) return false;
  }
  return true;
}

Partition star_congruence(const ConstructedAlgebra& c, const Partition& beta) {
  if (beta.size() != c.base.size())
    throw validation_error("star_congruence: partition size mismatch");
  if (!beta.leq(Partition::kernel(c.chi)))
    throw validation_error("star_congruence: congruence not below ker(chi)");
  const int n = c.carrier_size();
  const int m = c.num_sorts();
  std::vector<int> labels(n);
  std::vector<std::vector<int>> cols(n);
  for (int x = 0; x < n; ++x) cols[x] = c.decode(x);
  for (int x = 0; x < n; ++x) {
    int rep = x;
    for (int y = 0; y < x; ++y) {
      bool rel = true;
      for (int i = 0; i < m; ++i)
        if (!beta.related(cols[x][i], cols[y][i])) {
          rel = false;
          break;
        }
      if (rel) {
        rep = labels[y];
        break;
      }
    }
    labels[x] = rep;
  }
  return Partition(std::move(labels));
}

Partition unstar_congruence(const ConstructedAlgebra& c, const Partition& starred) {
  if (starred.size() != c.carrier_size())
    throw validation_error("unstar_congruence: partition size mismatch");
  const int m = c.num_sorts();
  // Relate a,b in sort i iff the columns equal elsewhere with a vs b at i
  // are starred-related.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    std::vector<int> fixed(m);
    for (int j = 0; j < m; ++j) fixed[j] = c.sort_elements[j].front();
    for (int a : c.sort_elements[i])
      for (int b : c.sort_elements[i]) {
        if (a >= b) continue;
        std::vector<int> ca = fixed, cb = fixed;
        ca[i] = a;
        cb[i] = b;
        if (starred.related(c.encode(ca), c.encode(cb))) pairs.emplace_back(a, b);
      }
  }
  std::vector<int> parent(c.base.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : pairs) {
    int la = parent[a], lb = parent[b];
    if (la != lb)
      for (int& p : parent)
        if (p == std::max(la, lb)) p = std::min(la, lb);
  }
  return Partition(parent);
}

TupleSet star_subuniverse(const TupleSet& b, const std::vector<ConstructedAlgebra>& ctx) {
  if (ctx.empty()) throw validation_error("star_subuniverse: empty context");
  const size_t nj = ctx.size();
  if (b.component_sizes.size() != nj)
    throw validation_error("star_subuniverse: component count mismatch");
  const int m = ctx.front().num_sorts();
  for (const auto& c : ctx)
    if (c.num_sorts() != m)
      throw validation_error("star_subuniverse: mismatched index algebras");

  // Rows of B that are sort-constant with value i.
  std::vector<std::vector<std::vector<int>>> rows(m);
  for (const auto& t : b.tuples) {
    int sort = ctx[0].chi.at(t[0]);
    bool constant = true;
    for (size_t j = 1; j < nj; ++j)
      if (ctx[j].chi.at(t[j]) != sort) {
        constant = false;
        break;
      }
    if (constant) rows[sort].push_back(t);
  }
  for (int i = 0; i < m; ++i)
    if (rows[i].empty())
      throw validation_error("star_subuniverse: B meets no tuple of sort " + std::to_string(i));

  TupleSet out;
  for (const auto& c : ctx) out.component_sizes.push_back(c.carrier_size());

  // All choices of one row per sort.
  std::vector<size_t> pick(m, 0);
  while (true) {
    std::vector<int> tuple(nj);
    for (size_t j = 0; j < nj; ++j) {
      std::vector<int> column(m);
      for (int i = 0; i < m; ++i) column[i] = rows[i][pick[i]][j];
      tuple[j] = ctx[j].encode(column);
    }
    out.tuples.insert(std::move(tuple));
    int p = m - 1;
    while (p >= 0 && pick[p] + 1 == rows[p].size()) pick[p--] = 0;
    if (p < 0) break;
    ++pick[p];
  }
  return out;
}

std::vector<int> tilde_map(const std::vector<int>& x,
                           const std::vector<std::vector<int>>& paddings,
                           const std::vector<ConstructedAlgebra>& ctx) {
  if (ctx.empty() || x.size() != ctx.size())
    throw validation_error("tilde_map: component count mismatch");
  const int m = ctx.front().num_sorts();
  const size_t nj = ctx.size();
  int sort = ctx[0].chi.at(x[0]);
  for (size_t j = 1; j < nj; ++j)
    if (ctx[j].chi.at(x[j]) != sort)
      throw validation_error("tilde_map: tuple is not sort-constant");
  if (static_cast<int>(paddings.size()) != m)
    throw validation_error("tilde_map: one padding per sort required");
  for (int i = 0; i < m; ++i) {
    if (paddings[i].size() != nj) throw validation_error("tilde_map: padding length mismatch");
    for (size_t j = 0; j < nj; ++j)
      if (ctx[j].chi.at(paddings[i][j]) != i)
        throw validation_error("tilde_map: padding for sort " + std::to_string(i) +
                               " is not in that sort");
  }
  std::vector<int> out(nj);
  for (size_t j = 0; j < nj; ++j) {
    std::vector<int> column(m);
    for (int i = 0; i < m; ++i) column[i] = (i == sort) ? x[j] : paddings[i][j];
    out[j] = ctx[j].encode(column);
  }
  return out;
}

std::vector<int> star_endomorphism(const ConstructedAlgebra& c, const std::vector<int>& psi) {
  if (psi.size() != static_cast<size_t>(c.base.size()))
    throw validation_error("star_endomorphism: map length mismatch");
  if (!is_homomorphism(c.base, c.base, psi))
    throw validation_error("star_endomorphism: not an endomorphism");
  for (int a = 0; a < c.base.size(); ++a)
    if (c.chi[psi[a]] != c.chi[a])
      throw validation_error("star_endomorphism: graph not below ker(chi)");
  std::vector<int> out(c.carrier_size());
  for (int code = 0; code < c.carrier_size(); ++code) {
    std::vector<int> column = c.decode(code);
    for (int& e : column) e = psi[e];
    out[code] = c.encode(column);
  }
  return out;
}

namespace {

std::vector<Term> coordinate_terms_rec(const ConstructedAlgebra& c, const Term& T,
                                       int term_arity) {
  const int m = c.num_sorts();
  std::vector<Term> out(m);
  if (T.is_var()) {
    if (T.var >= term_arity) throw validation_error("coordinate_terms: variable beyond arity");
    for (int i = 0; i < m; ++i) out[i] = Term::variable(T.var * m + i);
    return out;
  }
  if (T.symbol == "d") {
    if (static_cast<int>(T.children.size()) != m)
      throw validation_error("coordinate_terms: d arity mismatch");
    for (int i = 0; i < m; ++i)
      out[i] = coordinate_terms_rec(c, T.children[i], term_arity)[i];
    return out;
  }
  auto parsed = parse_constructed_op(T.symbol);
  if (!parsed) throw consistency_error("coordinate_terms: unreachable");
  const auto& [fname, sorts] = *parsed;
  int fop = c.base.signature().index_of(fname);
  if (fop < 0 || c.base.signature().at(fop).arity != static_cast<int>(T.children.size()) ||
      sorts.size() != T.children.size())
    throw validation_error("coordinate_terms: symbol '" + T.symbol +
                           "' outside the constructed signature");
  for (int s : sorts)
    if (s < 0 || s >= m)
      throw validation_error("coordinate_terms: sort index out of range in '" + T.symbol + "'");
  const int out_sort = c.index.apply(c.index.signature().index_of(fname), sorts);
  std::vector<std::vector<Term>> child_ts;
  child_ts.reserve(T.children.size());
  for (const Term& ch : T.children)
    child_ts.push_back(coordinate_terms_rec(c, ch, term_arity));
  for (int i = 0; i < m; ++i) {
    if (i == out_sort) {
      std::vector<Term> args;
      for (size_t p = 0; p < T.children.size(); ++p) args.push_back(child_ts[p][sorts[p]]);
      out[i] = Term::app(fname, std::move(args));
    } else {
      out[i] = child_ts[0][i];
    }
  }
  return out;
}

}  // namespace

std::vector<Term> coordinate_terms(const ConstructedAlgebra& c, const Term& T,
                                   int term_arity) {
  return coordinate_terms_rec(c, T, term_arity);
}

bool check_condition_i(const FiniteAlgebra& index, const std::vector<Term>& ts,
                       int term_arity) {
  const int m = static_cast<int>(ts.size());
  std::vector<int> env(static_cast<size_t>(m) * term_arity);
  for (int j = 0; j < term_arity; ++j)
    for (int i = 0; i < m; ++i) env[j * m + i] = i;
  for (int i = 0; i < m; ++i)
    if (eval_term(index, ts[i], env) != i) return false;
  return true;
}

namespace {

// Sort of a base term under the standard assignment: variable j*m+i has
// sort i; operations are evaluated in the index algebra.
int term_sort(const FiniteAlgebra& index, const Term& s, int m) {
  if (s.is_var()) return s.var % m;
  int op = index.signature().index_of(s.symbol);
  if (op < 0) throw validation_error("lift_term: unknown base symbol '" + s.symbol + "'");
  std::vector<int> args;
  for (const Term& ch : s.children) args.push_back(term_sort(index, ch, m));
  return index.apply(op, args);
}

Term lift_sub(const ConstructedAlgebra& c, const Term& s, int m) {
  if (s.is_var()) return Term::variable(s.var / m);
  std::vector<int> sorts;
  std::vector<Term> children;
  for (const Term& ch : s.children) {
    sorts.push_back(term_sort(c.index, ch, m));
    children.push_back(lift_sub(c, ch, m));
  }
  return Term::app(constructed_op_name(s.symbol, sorts), std::move(children));
}

}  // namespace

Term lift_term(const ConstructedAlgebra& c, const std::vector<Term>& ts, int term_arity) {
  const int m = c.num_sorts();
  if (static_cast<int>(ts.size()) != m)
    throw validation_error("lift_term: one coordinate term per sort required");
  if (!check_condition_i(c.index, ts, term_arity))
    throw validation_error("lift_term: coordinate terms violate condition (i)");
  std::vector<Term> branches;
  branches.reserve(m);
  for (const Term& t : ts) branches.push_back(lift_sub(c, t, m));
  return Term::app("d", std::move(branches));
}

Term lift_idempotent(const ConstructedAlgebra& c, const Term& t, int term_arity) {
  const int m = c.num_sorts();
  if (t.min_arity() > term_arity) throw validation_error("lift_idempotent: arity too small");
  for (int a = 0; a < c.base.size(); ++a) {
    std::vector<int> env(term_arity, a);
    if (eval_term(c.base, t, env) != a)
      throw validation_error("lift_idempotent: term is not idempotent on the base algebra");
  }
  std::vector<Term> ts;
  ts.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::vector<int> subst(term_arity);
    for (int j = 0; j < term_arity; ++j) subst[j] = j * m + i;
    ts.push_back(rename_vars(t, subst));
  }
  return lift_term(c, ts, term_arity);
}

}  // namespace ualg
