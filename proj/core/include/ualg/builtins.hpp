#ifndef UALG_BUILTINS_HPP_
#define UALG_BUILTINS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {
namespace builtins {

/// (Z2; +, -) in the group signature shared with z4g.
FiniteAlgebra z2g();
/// (Z4; +, -).
FiniteAlgebra z4g();
/// (Z4; +, -, b) with b(x,y) = 2xy.
FiniteAlgebra z4s();
/// Two-element meet semilattice ({0,1}; meet).
FiniteAlgebra a2();
/// Two-element lattice ({0,1}; meet, join).
FiniteAlgebra l2();
/// Klein-group algebra: z2g x z2g as a product algebra (size 4).
FiniteAlgebra klein();

/// All algebras above, by name.
std::vector<FiniteAlgebra> all();
std::optional<FiniteAlgebra> by_name(const std::string& name);

/// All sixteen algebras ({0,1}; f) with one binary operation f.
std::vector<FiniteAlgebra> binary_on_two();

}  // namespace builtins
}  // namespace ualg

#endif  // UALG_BUILTINS_HPP_
