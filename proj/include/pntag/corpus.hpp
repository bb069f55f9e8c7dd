#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pntag {

using word_set = std::set<std::string>;

enum class token_kind { word, punctuation, number };

struct token {
  std::string surface;     // as found in the text (whitespace-free)
  std::string normalized;  // sentence-initial case disambiguation applied
  token_kind kind = token_kind::word;
  bool sentence_initial = false;
};

struct sentence {
  std::vector<token> tokens;
};

struct document {
  std::string doc_id;
  std::vector<sentence> sentences;
};

struct corpus {
  std::vector<document> documents;
};

struct segment_options {
  // Colons introduce direct speech in newspaper text; off by default.
  bool colon_ends_sentence = false;
};

// Splits raw text into tokens. Every listed punctuation mark becomes its
// own token except a trailing period belonging to an abbreviation
// (abbreviations are the MC-lexicon surfaces that end in "."). Runs of
// hyphens collapse to a single hyphen, so "Baden--Baden" == "Baden-Baden".
std::vector<token> tokenize(std::string_view raw,
                            const word_set& abbreviations = {});

// Sentence boundary after each . ! ? token (and : when configured).
// Marks the first word token of every sentence as sentence_initial.
std::vector<sentence> segment_sentences(std::vector<token> tokens,
                                        const segment_options& opts = {});

// Lowercases a sentence-initial capitalized word iff the lowercase
// rendering occurs sentence-internally in the corpus.
std::string normalize_initial(std::string_view word,
                              const word_set& lowercase_words);

// Rewrites token.normalized for sentence-initial capitalized tokens.
void apply_initial_normalization(corpus& corp,
                                 const word_set& lowercase_words);

bool is_capitalized(const token& tok);

// All word surfaces with a lowercase initial letter found at a
// non-sentence-initial position.
word_set sentence_internal_lowercase_words(const corpus& corp);

document build_document(std::string doc_id, std::string_view raw,
                        const word_set& abbreviations = {},
                        const segment_options& opts = {});

// Tokenizes and segments every document, then applies sentence-initial
// normalization against the corpus-wide lowercase word index.
corpus build_corpus(const std::vector<std::pair<std::string, std::string>>&
                        docs,  // (doc_id, raw text)
                    const word_set& abbreviations = {},
                    const segment_options& opts = {});

}  // namespace pntag
