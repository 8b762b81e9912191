#include "ualg/builtins.hpp"

namespace ualg {
namespace builtins {

namespace {

Signature group_sig() { return Signature({{"+", 2}, {"-", 1}}); }

std::vector<int> mod_add_table(int n) {
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return t;
}

std::vector<int> mod_neg_table(int n) {
  std::vector<int> t(n);
  for (int a = 0; a < n; ++a) t[a] = (n - a) % n;
  return t;
}

}  // namespace

FiniteAlgebra z2g() {
  return FiniteAlgebra("Z2g", 2, group_sig(), {mod_add_table(2), mod_neg_table(2)});
}

FiniteAlgebra z4g() {
  return FiniteAlgebra("Z4g", 4, group_sig(), {mod_add_table(4), mod_neg_table(4)});
}

FiniteAlgebra z4s() {
  std::vector<int> b(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) b[x * 4 + y] = (2 * x * y) % 4;
  return FiniteAlgebra("Z4s", 4, Signature({{"+", 2}, {"-", 1}, {"b", 2}}),
                       {mod_add_table(4), mod_neg_table(4), std::move(b)});
}

FiniteAlgebra a2() {
  return FiniteAlgebra("A2", 2, Signature({{"meet", 2}}), {{0, 0, 0, 1}});
}

FiniteAlgebra l2() {
  return FiniteAlgebra("L2", 2, Signature({{"meet", 2}, {"join", 2}}),
                       {{0, 0, 0, 1}, {0, 1, 1, 1}});
}

FiniteAlgebra klein() {
  FiniteAlgebra k = product({z2g(), z2g()});
  k.set_name("Klein");
  return k;
}

std::vector<FiniteAlgebra> all() { return {z2g(), z4g(), z4s(), a2(), l2(), klein()}; }

std::optional<FiniteAlgebra> by_name(const std::string& name) {
  for (FiniteAlgebra& a : all())
    if (a.name() == name) return std::move(a);
  return std::nullopt;
}

std::vector<FiniteAlgebra> binary_on_two() {
  std::vector<FiniteAlgebra> out;
  for (int code = 0; code < 16; ++code) {
    std::vector<int> table = {(code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1, code & 1};
    out.push_back(FiniteAlgebra("B2_" + std::to_string(code), 2, Signature({{"f", 2}}),
                                {std::move(table)}));
  }
  return out;
}

}  // namespace builtins
}  // namespace ualg
