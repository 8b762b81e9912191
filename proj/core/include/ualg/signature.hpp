#ifndef UALG_SIGNATURE_HPP_
#define UALG_SIGNATURE_HPP_

#include <string>
#include <vector>

#include "ualg/errors.hpp"

namespace ualg {

struct OpSymbol {
  std::string name;
  int arity = 1;

  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

/// Finite algebraic language.  Names are unique and arities are >= 1;
/// nullary symbols are rejected (encode constants as unary constant maps).
class Signature {
public:
  Signature() = default;
  explicit Signature(std::vector<OpSymbol> symbols);

  const std::vector<OpSymbol>& symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }

  /// Index of a symbol by name, or -1.
  int index_of(const std::string& name) const;
  const OpSymbol& at(int i) const { return symbols_.at(i); }

  friend bool operator==(const Signature&, const Signature&) = default;

private:
  std::vector<OpSymbol> symbols_;
};

}  // namespace ualg

#endif  // UALG_SIGNATURE_HPP_
