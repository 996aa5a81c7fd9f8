#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ruleplay {

// Raised by any module when an input violates a documented precondition.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by text parsers (observations, commands, rule files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Final whitespace-delimited token of a phrase. Entity alignment across
// facts and action arguments compares root nouns, not full phrases.
// Empty or all-whitespace input is an error.
std::string root_noun(std::string_view phrase);

// True when both phrases have the same root noun.
bool same_root(std::string_view a, std::string_view b);

// Whitespace trim on both ends.
std::string trim(std::string_view s);

// Splits on a literal separator; no empty trailing element for trailing
// separators is produced.
std::vector<std::string> split(std::string_view s, std::string_view sep);

// Indefinite article for a phrase ("an apple", "a blue moccasin").
std::string_view article_for(std::string_view phrase);

// Joins "a x", "a y" ... with commas and a final "and": used by the
// fixed sentence templates.
std::string join_noun_list(const std::vector<std::string>& phrases);

}  // namespace ruleplay
