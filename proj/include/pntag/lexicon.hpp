#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pntag/corpus.hpp"

namespace pntag {

// One category space serves all three stores: the MC-lexicon uses the
// context categories, the PN-lexicon uses person/place/unknown, and the
// MCpot-lexicon uses mcpot.
enum class entry_category {
  title,
  address_form,
  apposition_noun,
  speech_verb,
  preposition,
  preposition_frame,
  person,
  place,
  unknown,
  mcpot,
};

std::string_view category_name(entry_category c);
std::optional<entry_category> parse_category(std::string_view name);

enum class entry_origin { seed, harvested };

struct lexicon_entry {
  entry_category category = entry_category::unknown;
  // Second slot of a preposition frame, e.g. "Raum" in "im Raum".
  std::optional<std::string> frame_second;
  entry_origin origin = entry_origin::seed;
  std::string first_seen_doc;
  std::vector<std::pair<std::string, std::string>> evidence;  // (rule, doc)
};

class lexicon {
 public:
  // True iff the surface was absent. Re-adding never changes metadata.
  bool add(std::string surface, lexicon_entry entry);
  bool contains(const std::string& surface) const;
  const lexicon_entry* find(const std::string& surface) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::map<std::string, lexicon_entry>& entries() const {
    return entries_;
  }
  const std::vector<std::string>& insertion_order() const {
    return insertion_order_;
  }

  // Surfaces holding any of the given categories.
  word_set surfaces_with(std::initializer_list<entry_category> cats) const;
  // (first word, second word) pairs of the preposition-frame entries.
  std::vector<std::pair<std::string, std::string>> frames() const;
  // MC surfaces ending in "." act as abbreviations during tokenization.
  word_set abbreviations() const;

  // Equality is on the persisted content: surface, category, frame word.
  friend bool operator==(const lexicon& a, const lexicon& b);

 private:
  std::map<std::string, lexicon_entry> entries_;
  std::vector<std::string> insertion_order_;
};

// Line format: surface<TAB>category[<TAB>frame_second]; '#' comments.
// Throws std::runtime_error naming the line number on malformed input or
// on a duplicate surface with a conflicting category.
lexicon load_lexicon(std::istream& in);
// Sorted by surface; save(load(save(L))) == save(L).
void save_lexicon(const lexicon& lex, std::ostream& out);

// Stop list: surface<TAB>(month|quantity) lines; '#' comments.
word_set load_stoplist(std::istream& in);
word_set default_stoplist();

}  // namespace pntag
