#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pntag/corpus.hpp"

namespace pntag {

// Ordered set of all word surfaces seen sentence-internally with a
// lowercase initial letter; drives sentence-initial disambiguation.
struct lowercase_index {
  word_set words;
  bool contains(const std::string& w) const { return words.count(w) > 0; }
};

lowercase_index build_lowercase_index(const corpus& corp);

// Distributional record per capitalized word: how often it follows an
// article, and which capitalized words or prepositions precede it.
struct cap_word_entry {
  std::string word;
  int article_count = 0;
  int occurrences = 0;
  std::vector<std::string> preceding;  // duplicates kept, corpus order
};

struct cap_index {
  std::map<std::string, cap_word_entry> entries;

  int article_count(const std::string& word) const;
  std::vector<std::string> preceding_contexts(const std::string& word) const;
  int distinct_preceding(const std::string& word) const;
};

// Records the immediately preceding token of every capitalized occurrence
// when it is capitalized or a preposition; counts preceding articles.
// Document boundaries block context.
cap_index build_cap_index(const corpus& corp, const word_set& prepositions,
                          const word_set& articles);

// All normalized word surfaces of the corpus.
word_set build_vocabulary(const corpus& corp);

// Table-style TSV: word, article_count, semicolon-joined preceding list.
void dump_cap_index(const cap_index& index, std::ostream& out);

}  // namespace pntag
