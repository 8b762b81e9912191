#include "ualg/supernil.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ualg/congruence.hpp"
#include "ualg/tct.hpp"

#include "new_combos.hpp"

namespace ualg {

namespace {

bool relations_equal(const Relation& a, const Relation& b, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.get(x, y) != b.get(x, y)) return false;
  return true;
}

// Condition (3): every block of alpha/beta in A/beta has p-power size for a
// single prime p.  Returns that prime (2 by convention when all blocks are
// singletons), or nullopt.
std::optional<int> condition3_prime(const Partition& alpha, const Partition& beta) {
  const std::vector<int> cls = beta.class_index();
  const int m = beta.num_classes();
  std::vector<int> rep(m, -1);
  for (int a = 0; a < alpha.size(); ++a)
    if (rep[cls[a]] == -1) rep[cls[a]] = a;
  // Image of alpha on the beta-classes.
  std::vector<int> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = i;
    for (int j = 0; j < i; ++j)
      if (alpha.related(rep[i], rep[j])) {
        labels[i] = labels[j];
        break;
      }
  }
  std::map<int, int> block_size;
  for (int i = 0; i < m; ++i) ++block_size[labels[i]];
  int prime = 0;
  for (const auto& [lbl, size] : block_size) {
    if (size == 1) continue;
    int s = size, p = 2;
    while (s % p != 0) ++p;
    while (s % p == 0) s /= p;
    if (s != 1) return std::nullopt;  // not a prime power
    if (prime == 0) prime = p;
    if (prime != p) return std::nullopt;  // mixed primes
  }
  return prime == 0 ? 2 : prime;
}

struct FactorSearchResult {
  bool found = false;
  std::vector<Partition> betas;
  std::vector<int> primes;
};

// Searches ordered lists beta_1..beta_l among the candidates for
// conditions (1) meet = 0 and (2) prefix-meets compose with beta_i to
// alpha in both orders (binary relational product).
FactorSearchResult search_factorization(const Partition& alpha,
                                        const std::vector<std::pair<Partition, int>>& candidates,
                                        std::size_t cap) {
  const int n = alpha.size();
  if (candidates.size() > 20)
    throw cap_exceeded("supernilpotence witness search: too many candidates");
  const Relation target = Relation::from_partition(alpha);

  const int nc = static_cast<int>(candidates.size());
  FactorSearchResult res;
  for (int l = 1; l <= nc && !res.found; ++l) {
    // Subsets of size l in lex order of index vectors.
    std::vector<int> subset(l);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      // Condition (1) is order-independent.
      Partition meet = candidates[subset[0]].first;
      for (int i = 1; i < l; ++i) meet = meet.meet(candidates[subset[i]].first);
      if (meet.is_identity()) {
        std::vector<int> perm = subset;
        std::sort(perm.begin(), perm.end());
        do {
          bool ok = true;
          Partition prefix = candidates[perm[0]].first;
          for (int i = 1; i < l && ok; ++i) {
            const Partition& beta = candidates[perm[i]].first;
            if (!relations_equal(relcompose(prefix, beta, 2), target, n) ||
                !relations_equal(relcompose(beta, prefix, 2), target, n))
              ok = false;
            prefix = prefix.meet(beta);
          }
          if (ok) {
            res.found = true;
            for (int i : perm) {
              res.betas.push_back(candidates[i].first);
              res.primes.push_back(candidates[i].second);
            }
            return res;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      // Next subset.
      int p = l - 1;
      while (p >= 0 && subset[p] == nc - l + p) --p;
      if (p < 0) break;
      ++subset[p];
      for (int q = p + 1; q < l; ++q) subset[q] = subset[q - 1] + 1;
    }
  }
  return res;
}

void necessary_type1_check(const FiniteAlgebra& alg, std::size_t cap) {
  // The verdict only depends on the tables; cache it across calls.
  static std::map<std::pair<int, std::vector<std::vector<int>>>, bool> cache;
  auto key = std::make_pair(alg.size(), alg.tables());
  if (auto it = cache.find(key); it != cache.end()) {
    if (it->second) return;
    throw validation_error(
        "decide_supernilpotent: a prime quotient of the algebra has type 1; "
        "the characterization requires omitting type 1 (pass the assertion "
        "flag only if the variety is known to omit it)");
  }
  std::vector<Partition> lat = con_lattice(alg, cap);
  auto covers = [&](const Partition& lo, const Partition& hi) {
    if (!lo.leq(hi) || lo == hi) return false;
    for (const Partition& mid : lat)
      if (lo.leq(mid) && mid.leq(hi) && mid != lo && mid != hi) return false;
    return true;
  };
  for (const Partition& lo : lat)
    for (const Partition& hi : lat) {
      if (!covers(lo, hi)) continue;
      if (classify_type(alg, lo, hi).type == 1) {
        cache[key] = false;
        throw validation_error(
            "decide_supernilpotent: a prime quotient of the algebra has type 1; "
            "the characterization requires omitting type 1 (pass the assertion "
            "flag only if the variety is known to omit it)");
      }
    }
  cache[key] = true;
}

}  // namespace

SupernilCertificate decide_supernilpotent(const FiniteAlgebra& alg, const Partition& alpha,
                                          bool assert_omits_type1, std::size_t cap) {
  if (!is_congruence(alg, alpha))
    throw validation_error("decide_supernilpotent: not a congruence");
  if (!assert_omits_type1) necessary_type1_check(alg, cap);

  SupernilCertificate cert;
  if (alpha.is_identity()) {
    cert.verdict = true;
    cert.witnesses = PrimeFactorRecord{};
    return cert;
  }
  if (!is_nilpotent(alg, alpha, cap).nilpotent) {
    cert.verdict = false;
    cert.failure = "nilpotence";
    return cert;
  }
  std::vector<std::pair<Partition, int>> candidates;
  for (const Partition& beta : interval_below(con_lattice(alg, cap), alpha))
    if (auto p = condition3_prime(alpha, beta)) candidates.emplace_back(beta, *p);

  FactorSearchResult search = search_factorization(alpha, candidates, cap);
  if (search.found) {
    cert.verdict = true;
    cert.witnesses = PrimeFactorRecord{std::move(search.betas), std::move(search.primes)};
  } else {
    cert.verdict = false;
    cert.failure = "no prime-power factorization witnesses (conditions (1)-(3))";
  }
  return cert;
}

CrossCheckRecord cross_check_via_c(const FiniteAlgebra& alg, const Partition& alpha,
                                   bool assert_omits_type1, std::size_t cap) {
  SupernilCertificate direct = decide_supernilpotent(alg, alpha, assert_omits_type1, cap);

  auto [aq, hom] = quotient(alg, alpha);
  ConstructedAlgebra c = construct_c(hom, cap);
  const int nc = c.carrier_size();

  CrossCheckRecord rec;
  rec.carrier_size = nc;
  const Partition total_c = Partition::total(nc);
  rec.c_nilpotent = is_nilpotent(c.alg, total_c, cap).nilpotent;

  if (rec.c_nilpotent) {
    std::vector<std::pair<Partition, int>> candidates;
    for (const Partition& gamma : con_lattice(c.alg, cap))
      if (auto p = condition3_prime(total_c, gamma)) candidates.emplace_back(gamma, *p);
    FactorSearchResult search = search_factorization(total_c, candidates, cap);
    if (search.found) {
      PrimeFactorRecord rec_fact;
      for (const Partition& gamma : search.betas)
        rec_fact.witnesses.push_back(unstar_congruence(c, gamma));
      rec_fact.primes = search.primes;
      rec.factorization = std::move(rec_fact);
    }
  }
  rec.verdict = rec.c_nilpotent && rec.factorization.has_value();
  if (rec.verdict != direct.verdict)
    throw consistency_error(
        "cross_check_via_c: constructed-algebra factorization disagrees with the "
        "direct decision");
  return rec;
}

MaltsevResult has_maltsev_term(const FiniteAlgebra& alg, std::size_t cap) {
  const int n = alg.size();
  const std::size_t len = static_cast<size_t>(n) * n * n;

  auto is_maltsev = [&](const std::vector<int>& t) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (t[(static_cast<size_t>(a) * n + a) * n + b] != b) return false;
        if (t[(static_cast<size_t>(a) * n + b) * n + b] != a) return false;
      }
    return true;
  };

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  std::vector<Term> terms;
  MaltsevResult res;

  auto push = [&](std::vector<int> t, Term term) -> bool {
    if (index.count(t)) return false;
    if (is_maltsev(t)) {
      res.status = MaltsevStatus::kFound;
      res.term = std::move(term);
      return true;
    }
    index.emplace(t, static_cast<int>(elems.size()));
    elems.push_back(std::move(t));
    terms.push_back(std::move(term));
    return false;
  };

  for (int v = 0; v < 3; ++v) {
    std::vector<int> t(len);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int vals[3] = {x, y, z};
          t[(static_cast<size_t>(x) * n + y) * n + z] = vals[v];
        }
    if (push(std::move(t), Term::variable(v))) return res;
  }

  const Signature& sig = alg.signature();
  for (size_t next = 0; next < elems.size(); ++next) {
    for (int op = 0; op < sig.size(); ++op) {
      const int r = sig.at(op).arity;
      bool stop = false;
      detail::for_new_combos(r, static_cast<int>(next), [&](const std::vector<int>& idx) {
        if (stop) return;
        std::vector<int> t(len);
        std::vector<int> args(r);
        for (std::size_t q = 0; q < len; ++q) {
          for (int p = 0; p < r; ++p) args[p] = elems[idx[p]][q];
          t[q] = alg.apply(op, args);
        }
        std::vector<Term> children;
        for (int p = 0; p < r; ++p) children.push_back(terms[idx[p]]);
        if (push(std::move(t), Term::app(sig.at(op).name, std::move(children)))) stop = true;
        if (elems.size() > cap) {
          res.status = MaltsevStatus::kUnknown;
          stop = true;
        }
      });
      if (stop) return res;
    }
  }
  res.status = MaltsevStatus::kNone;
  return res;
}

}  // namespace ualg
