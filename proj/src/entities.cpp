#include "ruleplay/entities.hpp"

#include <cctype>

namespace ruleplay {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string root_noun(std::string_view phrase) {
  std::size_t e = phrase.size();
  while (e > 0 && is_space(phrase[e - 1])) --e;
  if (e == 0) throw InputError("root_noun: empty phrase");
  std::size_t b = e;
  while (b > 0 && !is_space(phrase[b - 1])) --b;
  return std::string(phrase.substr(b, e - b));
}

bool same_root(std::string_view a, std::string_view b) {
  return root_noun(a) == root_noun(b);
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.emplace_back(s.substr(pos));
      break;
    }
    out.emplace_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
  return out;
}

std::string_view article_for(std::string_view phrase) {
  if (phrase.empty()) return "a";
  switch (std::tolower(static_cast<unsigned char>(phrase.front()))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return "an";
    default: return "a";
  }
}

std::string join_noun_list(const std::vector<std::string>& phrases) {
  std::string out;
  for (std::size_t i = 0; i < phrases.size(); ++i) {
    if (i > 0) out += (i + 1 == phrases.size()) ? " and " : ", ";
    out += article_for(phrases[i]);
    out += ' ';
    out += phrases[i];
  }
  return out;
}

}  // namespace ruleplay
