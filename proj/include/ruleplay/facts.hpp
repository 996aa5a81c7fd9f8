#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ruleplay {

// Closed inventory of state predicates the parser can emit.
namespace pred {
inline constexpr const char* be_located_at = "be-located-at";  // arity 1
inline constexpr const char* carry = "carry";                  // arity 1
inline constexpr const char* direction = "direction";          // arity 1
inline constexpr const char* open = "open";                    // arity 1
inline constexpr const char* atlocation = "atlocation";        // arity 2
}  // namespace pred

// Ground atom over entity phrases. Arity is 1 or 2; confidence stays 1.0
// for template parsing and exists for downstream weighting.
struct SymbolicFact {
  std::string predicate;
  std::vector<std::string> args;
  double confidence = 1.0;

  friend bool operator==(const SymbolicFact& a, const SymbolicFact& b) {
    return a.predicate == b.predicate && a.args == b.args;
  }
  friend auto operator<=>(const SymbolicFact& a, const SymbolicFact& b) {
    if (auto c = a.predicate <=> b.predicate; c != 0) return c;
    return a.args <=> b.args;
  }
};

using FactSet = std::vector<SymbolicFact>;

SymbolicFact fact1(std::string predicate, std::string arg);
SymbolicFact fact2(std::string predicate, std::string a0, std::string a1);

// Sorts and deduplicates; all fact-set comparisons go through this.
void canonicalize(FactSet& facts);

bool contains(const FactSet& facts, const SymbolicFact& f);

// "predicate(arg, arg)" rendering for logs and errors.
std::string to_string(const SymbolicFact& f);

}  // namespace ruleplay
