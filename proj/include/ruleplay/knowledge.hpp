#pragma once

#include <string>
#include <vector>

#include "ruleplay/facts.hpp"
#include "ruleplay/vocabulary.hpp"

namespace ruleplay {

struct GameSpec;

// Commonsense location triples: (object, atlocation, holder).
class CommonsenseGraph {
 public:
  CommonsenseGraph() = default;
  explicit CommonsenseGraph(std::vector<std::pair<std::string, std::string>> triples);

  void add(const std::string& object, const std::string& holder);
  const std::vector<std::pair<std::string, std::string>>& triples() const {
    return triples_;
  }

  // atlocation facts restricted to entities occurring in the spec. Goal
  // pairs are always included; include_distractors additionally admits any
  // other graph triple whose two entities both occur in the spec.
  FactSet subgraph_for(const GameSpec& spec, bool include_distractors) const;

 private:
  std::vector<std::pair<std::string, std::string>> triples_;
};

// Graph induced by a vocabulary's canonical (object, holder) pairs.
CommonsenseGraph graph_from_vocabulary(const EntityVocabulary& vocab);

// Loads "object<TAB>atlocation<TAB>holder" lines (a 4th column is allowed
// and ignored). Duplicate triples collapse. Malformed lines raise ParseError
// naming the line number.
CommonsenseGraph load_triples(const std::string& path);

void save_triples(const CommonsenseGraph& graph, const std::string& path);

}  // namespace ruleplay
