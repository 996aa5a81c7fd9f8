#include "ruleplay/vocabulary.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ruleplay/entities.hpp"

namespace ruleplay {

namespace {

constexpr HolderKind C = HolderKind::container;
constexpr HolderKind S = HolderKind::supporter;

// Object and holder root nouns are globally distinct so that any subset of
// the list can appear in one game without root-noun aliasing.
const std::vector<VocabEntry> kBuiltin = {
    // train entries
    {"brown golf shoe", "shoe cabinet", S, false},
    {"blue moccasin", "shoe cabinet", S, false},
    {"leather sandal", "shoe cabinet", S, false},
    {"plaid blanket", "linen chest", C, false},
    {"flannel sheet", "linen chest", C, false},
    {"wool sweater", "cedar dresser", C, false},
    {"denim jeans", "cedar dresser", C, false},
    {"dirty shirt", "laundry hamper", C, false},
    {"stained apron", "laundry hamper", C, false},
    {"clean towel", "towel rail", S, false},
    {"soft washcloth", "towel rail", S, false},
    {"red apple", "fruit bowl", C, false},
    {"ripe banana", "fruit bowl", C, false},
    {"used mug", "kitchen sink", C, false},
    {"dirty plate", "kitchen sink", C, false},
    {"clean fork", "cutlery tray", C, false},
    {"sharp knife", "knife block", C, false},
    {"steel cleaver", "knife block", C, false},
    {"wooden spoon", "utensil jar", C, false},
    {"rubber spatula", "utensil jar", C, false},
    {"frying pan", "pot rack", S, false},
    {"soup pot", "pot rack", S, false},
    {"crusty baguette", "bread box", C, false},
    {"coffee tin", "pantry shelf", S, false},
    {"cereal packet", "pantry shelf", S, false},
    {"gray coat", "coat stand", S, false},
    {"silk scarf", "coat stand", S, false},
    {"felt hat", "hat peg", S, false},
    {"milk carton", "refrigerator", C, false},
    {"cheese wedge", "refrigerator", C, false},
    {"pepper grinder", "spice cupboard", C, false},
    {"salt shaker", "spice cupboard", C, false},
    {"glossy magazine", "magazine basket", C, false},
    {"daily newspaper", "magazine basket", C, false},
    {"plush bear", "toy trunk", C, false},
    {"toy dinosaur", "toy trunk", C, false},
    {"thick novel", "oak bookcase", S, false},
    {"leather journal", "oak bookcase", S, false},
    {"mild shampoo", "shower caddy", S, false},
    {"bar soap", "shower caddy", S, false},
    {"potted fern", "window ledge", S, false},
    {"ceramic vase", "window ledge", S, false},
    {"nylon leash", "wall hook", S, false},
    {"canvas tote", "wall hook", S, false},
    {"alarm clock", "bedside table", S, false},
    {"reading lamp", "bedside table", S, false},
    {"eyeglass case", "bedside table", S, false},
    // held-out entries (out-of-distribution objects)
    {"suede slipper", "shoe cabinet", S, true},
    {"down pillow", "linen chest", C, true},
    {"cotton vest", "cedar dresser", C, true},
    {"damp sock", "laundry hamper", C, true},
    {"sour lemon", "fruit bowl", C, true},
    {"silver teaspoon", "cutlery tray", C, true},
    {"metal whisk", "utensil jar", C, true},
    {"rye loaf", "bread box", C, true},
    {"honey crock", "pantry shelf", S, true},
    {"tweed jacket", "coat stand", S, true},
    {"knit beanie", "hat peg", S, true},
    {"butter stick", "refrigerator", C, true},
    {"vanilla pod", "spice cupboard", C, true},
    {"wooden yoyo", "toy trunk", C, true},
    {"world atlas", "oak bookcase", S, true},
    {"loofah sponge", "shower caddy", S, true},
};

}  // namespace

EntityVocabulary::EntityVocabulary(std::vector<VocabEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("vocabulary: no entries");
  std::map<std::string, HolderKind> kinds;
  for (const auto& e : entries_) {
    if (e.object.empty() || e.holder.empty())
      throw InputError("vocabulary: empty phrase in entry");
    auto [it, inserted] = kinds.emplace(e.holder, e.kind);
    if (!inserted && it->second != e.kind)
      throw InputError("vocabulary: holder '" + e.holder +
                       "' listed with conflicting kinds");
  }
}

std::vector<const VocabEntry*> EntityVocabulary::train_entries() const {
  std::vector<const VocabEntry*> out;
  for (const auto& e : entries_)
    if (!e.held_out) out.push_back(&e);
  return out;
}

std::vector<const VocabEntry*> EntityVocabulary::held_out_entries() const {
  std::vector<const VocabEntry*> out;
  for (const auto& e : entries_)
    if (e.held_out) out.push_back(&e);
  return out;
}

bool EntityVocabulary::is_holder(const std::string& phrase) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const VocabEntry& e) { return e.holder == phrase; });
}

HolderKind EntityVocabulary::holder_kind(const std::string& phrase) const {
  for (const auto& e : entries_)
    if (e.holder == phrase) return e.kind;
  throw InputError("vocabulary: unknown holder '" + phrase + "'");
}

std::vector<std::string> EntityVocabulary::all_phrases() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.object);
  for (const auto& e : entries_) {
    if (std::find(out.begin(), out.end(), e.holder) == out.end())
      out.push_back(e.holder);
  }
  return out;
}

const EntityVocabulary& builtin_vocabulary() {
  static const EntityVocabulary vocab(kBuiltin);
  return vocab;
}

EntityVocabulary load_vocabulary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("vocabulary: cannot open '" + path + "'");
  std::vector<VocabEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split(t, "\t");
    if (fields.size() < 3 || fields.size() > 4)
      throw ParseError("vocabulary: line " + std::to_string(lineno) +
                       ": expected 3 or 4 tab-separated fields, got " +
                       std::to_string(fields.size()));
    if (fields[1] != "atlocation")
      throw ParseError("vocabulary: line " + std::to_string(lineno) +
                       ": relation must be 'atlocation', got '" + fields[1] + "'");
    VocabEntry e;
    e.object = trim(fields[0]);
    e.holder = trim(fields[2]);
    e.kind = HolderKind::container;
    if (fields.size() == 4) {
      std::string k = trim(fields[3]);
      if (k == "supporter") e.kind = HolderKind::supporter;
      else if (k == "container") e.kind = HolderKind::container;
      else
        throw ParseError("vocabulary: line " + std::to_string(lineno) +
                         ": kind must be container or supporter, got '" + k + "'");
    }
    entries.push_back(std::move(e));
  }
  // Trailing quarter is the held-out pool, as with the built-in list.
  std::size_t held = entries.size() / 4;
  for (std::size_t i = entries.size() - held; i < entries.size(); ++i)
    entries[i].held_out = true;
  return EntityVocabulary(std::move(entries));
}

}  // namespace ruleplay
