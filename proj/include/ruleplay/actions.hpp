#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ruleplay {

// Verb inventory. Signatures:
//   go/1 (direction), take/1 (object), take/2 (object, holder),
//   put/2 (object, supporter), insert/2 (object, container),
//   open/1 (container), examine/1 (entity), look/0, inventory/0.
namespace verb {
inline constexpr const char* go = "go";
inline constexpr const char* take = "take";
inline constexpr const char* put = "put";
inline constexpr const char* insert = "insert";
inline constexpr const char* open = "open";
inline constexpr const char* examine = "examine";
inline constexpr const char* look = "look";
inline constexpr const char* inventory = "inventory";
}  // namespace verb

// Verb plus arity. Rules, pruning verdicts and likelihood normalization all
// operate at this granularity (take/1 and take/2 are distinct).
struct ActionPredicate {
  std::string verb;
  int arity = 0;

  friend bool operator==(const ActionPredicate&, const ActionPredicate&) = default;
  friend auto operator<=>(const ActionPredicate&, const ActionPredicate&) = default;
};

std::string to_string(const ActionPredicate& p);

// Ground action. Args are entity phrases or direction words.
struct ActionCommand {
  std::string verb;
  std::vector<std::string> args;

  ActionPredicate predicate() const {
    return {verb, static_cast<int>(args.size())};
  }

  friend bool operator==(const ActionCommand&, const ActionCommand&) = default;
  friend auto operator<=>(const ActionCommand&, const ActionCommand&) = default;
};

// True when the verb is known and the arity matches its signature.
bool well_formed(const ActionCommand& a);

// The command string the simulator accepts and the tie-break rule sorts by:
//   "go east", "take dirty shirt", "take dirty shirt from laundry hamper",
//   "put clean towel on towel rail", "insert red apple into fruit bowl",
//   "open linen chest", "examine red apple", "look", "inventory".
std::string render_command(const ActionCommand& a);

ActionCommand make_command(std::string verb, std::vector<std::string> args = {});

}  // namespace ruleplay
