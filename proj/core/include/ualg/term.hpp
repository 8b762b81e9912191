#ifndef UALG_TERM_HPP_
#define UALG_TERM_HPP_

#include <string>
#include <vector>

#include "ualg/errors.hpp"

namespace ualg {

/// Term tree over some signature plus variables x0, x1, ...
/// A node is a variable iff var >= 0; otherwise symbol/children apply.
struct Term {
  int var = -1;
  std::string symbol;
  std::vector<Term> children;

  static Term variable(int index) {
    Term t;
    t.var = index;
    return t;
  }
  static Term app(std::string sym, std::vector<Term> args) {
    Term t;
    t.symbol = std::move(sym);
    t.children = std::move(args);
    return t;
  }

  bool is_var() const { return var >= 0; }

  /// 1 + max variable index occurring in the term (0 for variable-free).
  int min_arity() const;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Prefix text format: `(+ x0 (- x1))`, variables `x<i>`.
Term parse_term(const std::string& text);
std::string to_string(const Term& t);

/// Applies `subst` to every variable index.
Term rename_vars(const Term& t, const std::vector<int>& subst);

}  // namespace ualg

#endif  // UALG_TERM_HPP_
