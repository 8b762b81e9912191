#include "ualg/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ualg {

int Term::min_arity() const {
  if (is_var()) return var + 1;
  int m = 0;
  for (const Term& c : children) m = std::max(m, c.min_arity());
  return m;
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::string read_token(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
         s[pos] != '(' && s[pos] != ')') {
    ++pos;
  }
  if (pos == start) throw validation_error("term parse: expected token at " + std::to_string(pos));
  return s.substr(start, pos - start);
}

Term parse_node(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw validation_error("term parse: unexpected end of input");
  if (s[pos] == '(') {
    ++pos;
    skip_ws(s, pos);
    std::string sym = read_token(s, pos);
    std::vector<Term> args;
    skip_ws(s, pos);
    while (pos < s.size() && s[pos] != ')') {
      args.push_back(parse_node(s, pos));
      skip_ws(s, pos);
    }
    if (pos >= s.size()) throw validation_error("term parse: missing ')'");
    ++pos;
    return Term::app(std::move(sym), std::move(args));
  }
  std::string tok = read_token(s, pos);
  if (tok.size() >= 2 && tok[0] == 'x' &&
      std::all_of(tok.begin() + 1, tok.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return Term::variable(std::stoi(tok.substr(1)));
  }
  // Bare symbol without parentheses is only valid for variables.
  throw validation_error("term parse: expected variable x<i> or '(', got '" + tok + "'");
}

}  // namespace

Term parse_term(const std::string& text) {
  size_t pos = 0;
  Term t = parse_node(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw validation_error("term parse: trailing input");
  return t;
}

std::string to_string(const Term& t) {
  if (t.is_var()) return "x" + std::to_string(t.var);
  std::ostringstream os;
  os << '(' << t.symbol;
  for (const Term& c : t.children) os << ' ' << to_string(c);
  os << ')';
  return os.str();
}

Term rename_vars(const Term& t, const std::vector<int>& subst) {
  if (t.is_var()) return Term::variable(subst.at(t.var));
  Term out;
  out.symbol = t.symbol;
  out.children.reserve(t.children.size());
  for (const Term& c : t.children) out.children.push_back(rename_vars(c, subst));
  return out;
}

}  // namespace ualg
