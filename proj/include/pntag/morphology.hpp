#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pntag/corpus.hpp"
#include "pntag/lexicon.hpp"

namespace pntag {

struct affix_config {
  std::vector<std::string> onomastic_suffixes;
  std::vector<std::string> place_prefixes;
  std::vector<std::string> adjectival_endings;
  std::vector<std::string> impossible_pn_endings;
  std::vector<std::string> participle_prefixes;

  static affix_config defaults();
};

// INI-style sections named after the five lists, one lowercase affix per
// line. Throws on unknown sections, uppercase/empty affixes, or a config
// whose adjectival endings do not cover er/aner.
affix_config load_affix_config(std::istream& in);

// "Frankreichs" -> "Frankreich"; none unless the word ends in "s" and at
// least 3 code points remain. Callers verify the base against the corpus.
std::optional<std::string> strip_genitive(std::string_view word);

// True iff stripping some non-PN inflection leaves a form (>= 3 code
// points) that occurs in the corpus: such a word cannot be a proper name.
bool impossible_pn_inflection(std::string_view word, const word_set& vocab,
                              const affix_config& cfg);

bool has_onomastic_affix(std::string_view word, const affix_config& cfg);

// "Mainzer" -> "Mainz" when the base occurs in the corpus; endings are
// tried longest first.
std::optional<std::string> adjectival_base(std::string_view word,
                                           const word_set& vocab,
                                           const affix_config& cfg);

bool is_past_participle(std::string_view word, const affix_config& cfg);

// The MCpot entry that the word equals, or that it ends with as a
// compound head ("Senatspräsident" ends with "präsident").
std::optional<std::string> matches_mcpot_derived(std::string_view word,
                                                 const lexicon& mcpot);

}  // namespace pntag
