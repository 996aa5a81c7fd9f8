#include "ruleplay/rules_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ruleplay/entities.hpp"

namespace ruleplay {

namespace {

constexpr std::string_view kAndSign = "\xe2\x88\xa7";  // UTF-8 conjunction
constexpr std::string_view kNotSign = "\xc2\xac";      // UTF-8 negation

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

struct Cursor {
  const std::string& line;
  std::size_t line_no;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("rules:" + std::to_string(line_no) + ":" +
                     std::to_string(pos + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos < line.size() &&
           std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= line.size();
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (line.compare(pos, tok.size(), tok) != 0) return false;
    pos += tok.size();
    return true;
  }

  std::string ident() {
    skip_ws();
    if (pos >= line.size() || !ident_start(line[pos]))
      fail("expected identifier");
    std::size_t start = pos;
    while (pos < line.size() && ident_char(line[pos])) ++pos;
    return line.substr(start, pos - start);
  }

  double real() {
    skip_ws();
    // Scan the token extent by hand: from_chars over the whole tail would
    // swallow a trailing '.' with no digits after it ("@w=1."), and that
    // dot terminates the rule.
    auto digit = [this](std::size_t i) {
      return i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]));
    };
    std::size_t end = pos;
    if (end < line.size() && (line[end] == '+' || line[end] == '-')) ++end;
    while (digit(end)) ++end;
    if (end < line.size() && line[end] == '.' && digit(end + 1)) {
      ++end;
      while (digit(end)) ++end;
    }
    if (end < line.size() && (line[end] == 'e' || line[end] == 'E')) {
      std::size_t ex = end + 1;
      if (ex < line.size() && (line[ex] == '+' || line[ex] == '-')) ++ex;
      if (digit(ex)) {
        while (digit(ex)) ++ex;
        end = ex;
      }
    }
    double value = 0.0;
    auto [p, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc() || p != line.data() + end || end == pos)
      fail("expected a number");
    pos = end;
    return value;
  }
};

std::vector<Var> parse_vars(Cursor& c) {
  std::vector<Var> vars;
  if (!c.eat("(")) return vars;
  while (true) {
    c.skip_ws();
    std::string name = c.ident();
    if (name == "x") vars.push_back(Var::x);
    else if (name == "y") vars.push_back(Var::y);
    else c.fail("unknown variable '" + name + "' (variables are x and y)");
    if (c.eat(")")) break;
    if (!c.eat(",")) c.fail("expected ',' or ')' in variable list");
  }
  return vars;
}

HornRule parse_rule_line(const std::string& line, std::size_t line_no,
                         HornRule::Source source) {
  Cursor c{line, line_no};
  HornRule rule;
  rule.source = source;

  rule.head.verb = c.ident();
  std::vector<Var> head_vars = parse_vars(c);
  rule.head.arity = static_cast<int>(head_vars.size());
  bool head_ok = head_vars.empty() ||
                 (head_vars.size() == 1 && head_vars[0] == Var::x) ||
                 (head_vars.size() == 2 && head_vars[0] == Var::x &&
                  head_vars[1] == Var::y);
  if (!head_ok) c.fail("head variables must be (x) or (x,y)");
  if (c.eat("@b=")) rule.bias = c.real();

  if (c.eat(":-")) {
    while (true) {
      Literal lit;
      lit.negated = c.eat(kNotSign);
      std::string name = c.ident();
      if (!lit.negated && name == "not") {
        lit.negated = true;
        name = c.ident();
      }
      lit.predicate = std::move(name);
      lit.vars = parse_vars(c);
      if (c.eat("@w=")) lit.weight = c.real();
      rule.body.push_back(std::move(lit));
      if (c.eat("&") || c.eat(kAndSign)) continue;
      break;
    }
  }
  if (!c.eat(".")) c.fail("expected '.' at end of rule");
  if (!c.at_end()) c.fail("trailing characters after rule");

  try {
    rule.validate();
  } catch (const InputError& e) {
    throw ParseError("rules:" + std::to_string(line_no) + ": " + e.what());
  }
  return rule;
}

std::string format_vars(int arity) {
  if (arity == 0) return "";
  return arity == 1 ? "(x)" : "(x,y)";
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

RuleSet parse_rules(const std::string& text, HornRule::Source source) {
  std::vector<HornRule> rules;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, "\n")) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    HornRule rule = parse_rule_line(line, line_no, source);
    for (const auto& prev : rules) {
      if (prev.head == rule.head)
        throw ParseError("rules:" + std::to_string(line_no) +
                         ": duplicate head '" + to_string(rule.head) + "'");
    }
    rules.push_back(std::move(rule));
  }
  return RuleSet(std::move(rules));
}

std::string serialize_rules(const RuleSet& rules) {
  std::ostringstream out;
  out << "# horn rules, one per action predicate\n";
  for (const auto& r : rules.rules()) {
    out << r.head.verb << format_vars(r.head.arity);
    if (r.bias) out << " @b=" << format_real(*r.bias);
    if (!r.body.empty()) {
      out << " :- ";
      for (std::size_t i = 0; i < r.body.size(); ++i) {
        const Literal& lit = r.body[i];
        if (i > 0) out << " & ";
        if (lit.negated) out << "not ";
        out << lit.predicate;
        if (!lit.vars.empty()) {
          out << "(";
          for (std::size_t k = 0; k < lit.vars.size(); ++k) {
            if (k > 0) out << ",";
            out << to_string(lit.vars[k]);
          }
          out << ")";
        }
        if (lit.weight) out << " @w=" << format_real(*lit.weight);
      }
    }
    out << ".\n";
  }
  return out.str();
}

RuleSet apply_edit(const RuleSet& learned, const RuleSet& edits) {
  RuleSet out = learned;
  for (const auto& r : edits.rules()) out.add_or_replace(r);
  return out;
}

RuleSet load_rules(const std::string& path, HornRule::Source source) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open rules file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_rules(ss.str(), source);
}

void save_rules(const std::string& path, const RuleSet& rules) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write rules file '" + path + "'");
  out << serialize_rules(rules);
}

}  // namespace ruleplay
