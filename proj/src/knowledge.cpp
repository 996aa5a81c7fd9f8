#include "ruleplay/knowledge.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "ruleplay/entities.hpp"
#include "ruleplay/game.hpp"

namespace ruleplay {

CommonsenseGraph::CommonsenseGraph(
    std::vector<std::pair<std::string, std::string>> triples)
    : triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

void CommonsenseGraph::add(const std::string& object, const std::string& holder) {
  auto t = std::make_pair(object, holder);
  auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
  if (it == triples_.end() || *it != t) triples_.insert(it, t);
}

FactSet CommonsenseGraph::subgraph_for(const GameSpec& spec,
                                       bool include_distractors) const {
  std::set<std::string> present;
  for (const auto& e : spec.entities) present.insert(e.phrase);

  FactSet facts;
  for (const auto& [obj, holder] : spec.goal_map)
    facts.push_back(fact2(pred::atlocation, obj, holder));
  if (include_distractors) {
    for (const auto& [obj, holder] : triples_) {
      if (present.count(obj) && present.count(holder))
        facts.push_back(fact2(pred::atlocation, obj, holder));
    }
  }
  canonicalize(facts);
  return facts;
}

CommonsenseGraph graph_from_vocabulary(const EntityVocabulary& vocab) {
  std::vector<std::pair<std::string, std::string>> triples;
  for (const auto& e : vocab.entries()) triples.emplace_back(e.object, e.holder);
  return CommonsenseGraph(std::move(triples));
}

CommonsenseGraph load_triples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("triples: cannot open '" + path + "'");
  std::vector<std::pair<std::string, std::string>> triples;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split(t, "\t");
    if (fields.size() < 3)
      throw ParseError("triples: line " + std::to_string(lineno) +
                       ": expected object<TAB>atlocation<TAB>holder, got " +
                       std::to_string(fields.size()) + " fields");
    if (fields[1] != "atlocation")
      throw ParseError("triples: line " + std::to_string(lineno) +
                       ": relation must be 'atlocation', got '" + fields[1] + "'");
    std::string obj = trim(fields[0]);
    std::string holder = trim(fields[2]);
    if (obj.empty() || holder.empty())
      throw ParseError("triples: line " + std::to_string(lineno) +
                       ": empty entity phrase");
    triples.emplace_back(std::move(obj), std::move(holder));
  }
  return CommonsenseGraph(std::move(triples));
}

void save_triples(const CommonsenseGraph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("triples: cannot write '" + path + "'");
  for (const auto& [obj, holder] : graph.triples())
    out << obj << "\tatlocation\t" << holder << "\n";
}

}  // namespace ruleplay
