#include "ruleplay/facts.hpp"

#include <algorithm>

namespace ruleplay {

SymbolicFact fact1(std::string predicate, std::string arg) {
  return SymbolicFact{std::move(predicate), {std::move(arg)}, 1.0};
}

SymbolicFact fact2(std::string predicate, std::string a0, std::string a1) {
  return SymbolicFact{std::move(predicate), {std::move(a0), std::move(a1)}, 1.0};
}

void canonicalize(FactSet& facts) {
  std::sort(facts.begin(), facts.end());
  facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
}

bool contains(const FactSet& facts, const SymbolicFact& f) {
  return std::find(facts.begin(), facts.end(), f) != facts.end();
}

std::string to_string(const SymbolicFact& f) {
  std::string out = f.predicate + "(";
  for (std::size_t i = 0; i < f.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += f.args[i];
  }
  out += ")";
  return out;
}

}  // namespace ruleplay
