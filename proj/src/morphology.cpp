#include "pntag/morphology.hpp"

#include <algorithm>
#include <istream>
#include <stdexcept>

#include "pntag/textutil.hpp"

namespace pntag {

namespace {

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() > suffix.size() &&
         word.substr(word.size() - suffix.size()) == suffix;
}

}  // namespace

affix_config affix_config::defaults() {
  affix_config cfg;
  cfg.onomastic_suffixes = {"acker", "aich",    "beuren", "hafen", "hausen",
                            "stetten", "weiler", "ingen",  "dorf"};
  cfg.place_prefixes = {"mittel", "ost", "west", "zentral"};
  cfg.adjectival_endings = {"er", "aner"};
  // Genitive -s is a possible proper-name ending and is handled by the
  // genitive rules instead; listing it here would reject every genitive.
  cfg.impossible_pn_endings = {"en", "n", "e", "er"};
  cfg.participle_prefixes = {"an",   "auf", "aus", "be", "ein", "mit",
                             "nach", "ver", "vor", "zer", "zu"};
  return cfg;
}

affix_config load_affix_config(std::istream& in) {
  affix_config cfg;
  std::vector<std::string>* section = nullptr;
  std::string line;
  int line_no = 0;
  const auto fail = [&](const std::string& what) {
    throw std::runtime_error("affix config: line " + std::to_string(line_no) +
                             ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      std::string name = line.substr(1, line.size() - 2);
      if (name == "onomastic_suffixes")
        section = &cfg.onomastic_suffixes;
      else if (name == "place_prefixes")
        section = &cfg.place_prefixes;
      else if (name == "adjectival_endings")
        section = &cfg.adjectival_endings;
      else if (name == "impossible_pn_endings")
        section = &cfg.impossible_pn_endings;
      else if (name == "participle_prefixes")
        section = &cfg.participle_prefixes;
      else
        fail("unknown section '" + name + "'");
      continue;
    }
    if (section == nullptr) fail("affix outside any section");
    if (line != text::to_lower_all(line)) fail("affixes must be lowercase");
    section->push_back(line);
  }
  const auto& adj = cfg.adjectival_endings;
  if (std::find(adj.begin(), adj.end(), "er") == adj.end() ||
      std::find(adj.begin(), adj.end(), "aner") == adj.end())
    throw std::runtime_error(
        "affix config: adjectival_endings must include er and aner");
  return cfg;
}

std::optional<std::string> strip_genitive(std::string_view word) {
  if (word.size() < 2 || word.back() != 's') return std::nullopt;
  std::string_view base = word.substr(0, word.size() - 1);
  if (text::cp_length(base) < 3) return std::nullopt;
  return std::string(base);
}

bool impossible_pn_inflection(std::string_view word, const word_set& vocab,
                              const affix_config& cfg) {
  for (const auto& ending : cfg.impossible_pn_endings) {
    if (!ends_with(word, ending)) continue;
    std::string base(word.substr(0, word.size() - ending.size()));
    if (text::cp_length(base) >= 3 && vocab.count(base) > 0) return true;
  }
  return false;
}

bool has_onomastic_affix(std::string_view word, const affix_config& cfg) {
  std::string lw = text::to_lower_all(word);
  for (const auto& suffix : cfg.onomastic_suffixes)
    if (ends_with(lw, suffix)) return true;
  for (const auto& prefix : cfg.place_prefixes)
    if (lw.size() > prefix.size() && lw.compare(0, prefix.size(), prefix) == 0)
      return true;
  return false;
}

std::optional<std::string> adjectival_base(std::string_view word,
                                           const word_set& vocab,
                                           const affix_config& cfg) {
  std::vector<std::string> endings = cfg.adjectival_endings;
  std::stable_sort(endings.begin(), endings.end(),
                   [](const std::string& a, const std::string& b) {
                     return a.size() > b.size();
                   });
  for (const auto& ending : endings) {
    if (!ends_with(word, ending)) continue;
    std::string base(word.substr(0, word.size() - ending.size()));
    if (text::cp_length(base) >= 3 && vocab.count(base) > 0) return base;
  }
  return std::nullopt;
}

bool is_past_participle(std::string_view word, const affix_config& cfg) {
  if (!text::starts_lower(word)) return false;
  if (!ends_with(word, "t") && !ends_with(word, "en")) return false;
  if (word.substr(0, 2) == "ge") return true;
  for (const auto& prefix : cfg.participle_prefixes)
    if (word.size() > prefix.size() + 2 &&
        word.compare(0, prefix.size(), prefix) == 0 &&
        word.compare(prefix.size(), 2, "ge") == 0)
      return true;
  return false;
}

std::optional<std::string> matches_mcpot_derived(std::string_view word,
                                                 const lexicon& mcpot) {
  std::string key(word);
  if (mcpot.contains(key)) return key;
  for (const auto& [entry, meta] : mcpot.entries()) {
    (void)meta;
    if (text::cp_length(entry) < 4) continue;
    std::string head = text::to_lower_all(entry);
    if (ends_with(word, head)) return entry;  // match starts past position 0
  }
  return std::nullopt;
}

}  // namespace pntag
