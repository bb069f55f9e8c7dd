#include "pntag/word_index.hpp"

#include <ostream>
#include <set>

namespace pntag {

lowercase_index build_lowercase_index(const corpus& corp) {
  return {sentence_internal_lowercase_words(corp)};
}

int cap_index::article_count(const std::string& word) const {
  auto it = entries.find(word);
  return it == entries.end() ? 0 : it->second.article_count;
}

std::vector<std::string> cap_index::preceding_contexts(
    const std::string& word) const {
  auto it = entries.find(word);
  return it == entries.end() ? std::vector<std::string>{}
                             : it->second.preceding;
}

int cap_index::distinct_preceding(const std::string& word) const {
  auto it = entries.find(word);
  if (it == entries.end()) return 0;
  std::set<std::string> distinct(it->second.preceding.begin(),
                                 it->second.preceding.end());
  return static_cast<int>(distinct.size());
}

cap_index build_cap_index(const corpus& corp, const word_set& prepositions,
                          const word_set& articles) {
  cap_index index;
  for (const auto& doc : corp.documents) {
    const token* prev = nullptr;  // reset per document
    for (const auto& sent : doc.sentences) {
      for (const auto& tok : sent.tokens) {
        if (is_capitalized(tok)) {
          auto& entry = index.entries[tok.normalized];
          entry.word = tok.normalized;
          ++entry.occurrences;
          if (prev != nullptr) {
            if (articles.count(prev->normalized) > 0) ++entry.article_count;
            if (is_capitalized(*prev) ||
                prepositions.count(prev->normalized) > 0)
              entry.preceding.push_back(prev->normalized);
          }
        }
        prev = &tok;
      }
    }
  }
  return index;
}

word_set build_vocabulary(const corpus& corp) {
  word_set vocab;
  for (const auto& doc : corp.documents)
    for (const auto& sent : doc.sentences)
      for (const auto& tok : sent.tokens)
        if (tok.kind == token_kind::word) vocab.insert(tok.normalized);
  return vocab;
}

void dump_cap_index(const cap_index& index, std::ostream& out) {
  for (const auto& [word, entry] : index.entries) {
    out << word << '\t' << entry.article_count << '\t';
    for (std::size_t i = 0; i < entry.preceding.size(); ++i) {
      if (i > 0) out << ';';
      out << entry.preceding[i];
    }
    out << '\n';
  }
}

}  // namespace pntag
