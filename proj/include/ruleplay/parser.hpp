#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ruleplay/actions.hpp"
#include "ruleplay/facts.hpp"

namespace ruleplay {

// Template-based semantic parser over the simulator's fixed sentence
// grammar. Every line of an observation must match a known template;
// an unknown sentence raises ParseError naming it. Coordinated noun
// phrases ("a <x>, a <y> and a <z>") expand into one fact per entity.
FactSet parse_observation(const std::string& text);

// Command string -> ActionCommand ("take blue moccasin from shoe cabinet").
// Unknown verbs or malformed argument shapes raise ParseError.
ActionCommand parse_action(const std::string& command);

struct NoiseConfig {
  double p_drop = 0.0;   // per-fact drop probability
  double p_swap = 0.0;   // per-argument entity replacement probability
  std::uint64_t seed = 0;
};

// Deterministic parse-noise injector emulating upstream extraction errors.
// Facts are visited in canonical order; swapped arguments are replaced by
// a uniformly drawn phrase from the pool. The injector advances one rng
// stream across calls, so a fixed seed reproduces a whole episode's noise.
class NoiseModel {
 public:
  NoiseModel(NoiseConfig config, std::vector<std::string> pool);

  FactSet apply(const FactSet& facts);

 private:
  NoiseConfig config_;
  std::vector<std::string> pool_;
  std::uint64_t state_;
};

// One-shot noise application with a fresh stream seeded from the config.
FactSet apply_noise(const FactSet& facts, const NoiseConfig& config,
                    std::vector<std::string> pool = {});

}  // namespace ruleplay
