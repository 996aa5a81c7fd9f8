#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruleplay/actions.hpp"

namespace ruleplay {

// Rule variables. Head patterns are fixed: () for arity 0, (x) for arity 1,
// (x,y) for arity 2, so a body variable names a head argument position.
enum class Var { x, y };

std::string to_string(Var v);

// One body literal: predicate over head variables, optional negation
// (crisp, negation as failure), optional learned-weight annotation.
struct Literal {
  std::string predicate;
  std::vector<Var> vars;
  bool negated = false;
  std::optional<double> weight;

  bool operator==(const Literal&) const = default;
};

// A lifted action rule: head predicate plus conjunctive body. `bias` is the
// conjunction neuron bias annotation used by weighted inference.
struct HornRule {
  enum class Source { learned, human };

  ActionPredicate head;
  std::vector<Literal> body;
  std::optional<double> bias;
  Source source = Source::learned;

  // Safety: every body variable must name a head argument position, and
  // the head must be a well-formed action predicate shape.
  void validate() const;

  // Structural equality; `source` is provenance and deliberately excluded
  // so serialization round-trips compare equal.
  friend bool operator==(const HornRule& a, const HornRule& b) {
    return a.head == b.head && a.body == b.body && a.bias == b.bias;
  }
};

// Ordered rule collection with at most one rule per (verb, arity).
class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<HornRule> rules);

  const std::vector<HornRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  const HornRule* find(const ActionPredicate& p) const;

  // Appends, or replaces the existing rule with the same (verb, arity).
  void add_or_replace(HornRule rule);

  bool operator==(const RuleSet&) const = default;

 private:
  std::vector<HornRule> rules_;
};

}  // namespace ruleplay
