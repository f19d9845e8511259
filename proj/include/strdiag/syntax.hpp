#pragma once

// Concrete syntax for terms and theory files.
//
//   term  := par (';' par)*
//   par   := atom ('*' atom)*
//   atom  := '(' term ')' | 'id' nat | 'sym' nat nat | 'cup' nat | 'cap' nat
//          | 'fmul' | 'funit' | 'fcomul' | 'fcounit' | identifier
//
// Theory files are line based: `theory <id>`, `mode smc|frobenius`,
// `gen <id> : <nat> -> <nat>`, `rule <id> : <term> => <term>`; `#` starts a
// comment. Errors carry line and column.

#include <string>
#include <string_view>
#include <vector>

#include "strdiag/hypergraph.hpp"
#include "strdiag/term.hpp"

namespace strdiag {

/// Throws Errc::Parse.
Term parse_term(std::string_view text);

struct RuleDecl {
  std::string name;
  Term lhs;
  Term rhs;
  std::size_t line = 0;
};

struct Theory {
  std::string name;
  Mode mode = Mode::Smc;
  Signature signature;
  std::vector<RuleDecl> rules;

  const RuleDecl* find_rule(std::string_view name) const;
};

/// Parses and typechecks. Throws Errc::Parse for syntax errors and duplicate
/// names; typing errors keep their own code with a line prefix.
Theory parse_theory(std::string_view text);

/// The theory back in file syntax.
std::string to_string(const Theory& theory);

}  // namespace strdiag
