#pragma once

#include <string>

#include "ruleplay/rules.hpp"

namespace ruleplay {

// Rule file grammar, one rule per line:
//
//   # comment
//   head(x,y) [@b=<real>] :- [not] pred(x) [@w=<real>] & pred2(x,y).
//   head(x).                        (empty body: always true)
//
// `&` and the UTF-8 conjunction sign are interchangeable, as are `not` and
// the UTF-8 negation sign. Head variable patterns are fixed: (), (x) or
// (x,y). Syntax errors carry 1-based line and byte-column positions.
// Shortest round-trip decimal rendering (via std::to_chars), shared by
// every deterministic text artifact.
std::string format_real(double v);

RuleSet parse_rules(const std::string& text,
                    HornRule::Source source = HornRule::Source::learned);

// Canonical form: header comment, `&` separators, `not` negation, shortest
// round-trip number formatting. parse(serialize(r)) == r structurally.
std::string serialize_rules(const RuleSet& rules);

// Edits override learned rules with the same (verb, arity); new heads are
// appended in edit order.
RuleSet apply_edit(const RuleSet& learned, const RuleSet& edits);

RuleSet load_rules(const std::string& path,
                   HornRule::Source source = HornRule::Source::learned);
void save_rules(const std::string& path, const RuleSet& rules);

}  // namespace ruleplay
