#include "ruleplay/rules.hpp"

#include <algorithm>

#include "ruleplay/entities.hpp"

namespace ruleplay {

std::string to_string(Var v) { return v == Var::x ? "x" : "y"; }

void HornRule::validate() const {
  if (head.verb.empty()) throw InputError("rule: empty head predicate");
  if (head.arity < 0 || head.arity > 2)
    throw InputError("rule: head arity " + std::to_string(head.arity) +
                     " out of range in '" + head.verb + "'");
  for (const auto& lit : body) {
    if (lit.predicate.empty())
      throw InputError("rule: empty body predicate in '" + head.verb + "'");
    if (lit.weight && *lit.weight < 0.0)
      throw InputError("rule: negative weight on '" + lit.predicate + "' in '" +
                       head.verb + "'");
    for (Var v : lit.vars) {
      int pos = v == Var::x ? 0 : 1;
      if (pos >= head.arity)
        throw InputError("rule: unsafe variable '" + to_string(v) + "' in '" +
                         head.verb + "/" + std::to_string(head.arity) + "'");
    }
  }
  if (bias && *bias < 0.0)
    throw InputError("rule: negative bias on '" + head.verb + "'");
}

RuleSet::RuleSet(std::vector<HornRule> rules) : rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    rules_[i].validate();
    for (std::size_t j = 0; j < i; ++j) {
      if (rules_[j].head == rules_[i].head)
        throw InputError("rules: duplicate head '" + rules_[i].head.verb + "/" +
                         std::to_string(rules_[i].head.arity) + "'");
    }
  }
}

const HornRule* RuleSet::find(const ActionPredicate& p) const {
  for (const auto& r : rules_)
    if (r.head == p) return &r;
  return nullptr;
}

void RuleSet::add_or_replace(HornRule rule) {
  rule.validate();
  for (auto& r : rules_) {
    if (r.head == rule.head) {
      r = std::move(rule);
      return;
    }
  }
  rules_.push_back(std::move(rule));
}

}  // namespace ruleplay
