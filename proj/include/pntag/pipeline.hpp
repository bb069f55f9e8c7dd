#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pntag/corpus.hpp"
#include "pntag/lexicon.hpp"
#include "pntag/morphology.hpp"
#include "pntag/word_index.hpp"

namespace pntag {

struct pipeline_config {
  int max_iterations = 50;
  // Distinct preceding contexts required by the distributional rule.
  int min_evidence = 2;
  // How many contiguous preceding capitalized words feed the MCpot store.
  int mcpot_window = 2;
  word_set articles;
  // Prepositions that pair with a following capitalized word as a
  // hypothesis. Broader than the MC-lexicon place prepositions, which
  // tag definitely; contracted forms (im, am, ...) stay out.
  word_set hypothesis_prepositions;
  word_set genitive_articles;
  word_set stoplist;  // words never admitted into the PN-lexicon
  affix_config affixes;

  static pipeline_config defaults();
};

word_set default_articles();
word_set default_hypothesis_prepositions();

struct lexicon_set {
  lexicon mc;
  lexicon mcpot;
  lexicon pn;
};

// Indexes derived once from the normalized corpus.
struct corpus_indexes {
  word_set vocabulary;
  cap_index caps;
};

corpus_indexes build_indexes(const corpus& corp, const pipeline_config& cfg);

enum class hypothesis_kind { cap_pair, prep_cap };
enum class hypothesis_status { pending, accepted, rejected, unresolved };

struct hypothesis_occurrence {
  std::string doc_id;
  int doc_index = 0;
  int sentence_no = 0;
  long seq = 0;  // global scan position, for report ordering
};

struct hypothesis {
  hypothesis_kind kind = hypothesis_kind::cap_pair;
  std::string left;
  std::string right;
  std::string doc_id;  // first occurrence
  int sentence_no = 0;
  hypothesis_status status = hypothesis_status::pending;
  std::optional<std::string> rule_fired;
  bool in_quotes = false;
  std::vector<hypothesis_occurrence> occurrences;
  // Next-token evidence, true if any occurrence shows it.
  bool followed_by_genitive_article = false;
  bool followed_by_participle = false;
  bool followed_by_capitalized = false;
};

enum class decision_outcome { accept_pn, reject, unresolved };

struct decision {
  decision_outcome outcome = decision_outcome::unresolved;
  std::optional<std::string> new_pn;
  entry_category pn_subkind = entry_category::unknown;
  std::vector<std::string> new_mcpots;
  std::string rule_id;
  std::string reason;
};

struct fixpoint_iteration {
  int pn_new = 0;
  int mcpot_new = 0;
  int hypotheses_evaluated = 0;
};

struct fixpoint_stats {
  std::vector<fixpoint_iteration> iterations;
  bool iteration_cap_hit = false;
};

struct fixpoint_result {
  fixpoint_stats stats;
  std::vector<hypothesis> final_hypotheses;
};

// First scan: definite proper names from MC-lexicon contexts (titles,
// address forms, apposition nouns, speech verbs, place prepositions and
// frames). Returns the number of new PN entries.
int definite_pn_pass(const corpus& corp, const lexicon& mc, lexicon& pn,
                     const pipeline_config& cfg);

// Preceding capitalized words of non-genitive PN occurrences.
int collect_mcpot(const corpus& corp, const lexicon& pn, lexicon& mcpot,
                  const pipeline_config& cfg);

// Adjectival place derivation (Mainzer -> Mainz) plus onomastic words
// after a place preposition.
int place_name_pass(const corpus& corp, lexicon& pn,
                    const word_set& vocabulary, const word_set& place_preps,
                    const pipeline_config& cfg);

// Loose appositional constructions: <article> <Cap> [<gen-art> [adj] <Cap>]
// "," <Cap+> "," -- the final capitalized word of the comma slot is a name;
// earlier slot words land in the MCpot store when they are derived forms.
int apposition_pass(const corpus& corp, lexicon& pn, lexicon& mcpot,
                    const pipeline_config& cfg);

// Adjacent capitalized pairs and preposition+capitalized pairs, merged on
// (kind, left, right). Pairs whose left word is already a proper name are
// emitted pre-rejected.
std::vector<hypothesis> generate_hypotheses(const corpus& corp,
                                            const lexicon& pn,
                                            const pipeline_config& cfg);

// Rule order is fixed; the first matching rule decides.
decision evaluate_hypothesis(const hypothesis& h, const lexicon& pn,
                             const lexicon& mcpot, const cap_index& caps,
                             const word_set& vocabulary,
                             const pipeline_config& cfg);

// Repeats harvest + hypothesis evaluation until an iteration adds no new
// proper name. Each iteration scans frozen lexicons; accepted entries are
// applied as a batch afterwards, in first-occurrence order.
fixpoint_result run_fixpoint(const corpus& corp, const corpus_indexes& idx,
                             lexicon_set& lexicons,
                             const pipeline_config& cfg);

// NE iff the normalized surface, or its genitive-stripped base, is in the
// PN-lexicon.
std::string_view tag_of(const token& tok, const lexicon& pn);

// One token per line "surface<TAB>tag", blank line between sentences.
void write_tagged(const corpus& corp, const lexicon& pn, std::ostream& out);

// Lines "iteration<TAB>pn_new<TAB>mcpot_new<TAB>hypotheses".
void write_stats(const fixpoint_stats& stats, std::ostream& out);

struct pipeline_outcome {
  int definite_new = 0;
  fixpoint_result fixpoint;
};

// Convenience driver: indexes, definite pass, fixpoint.
pipeline_outcome run_pipeline(const corpus& corp, lexicon_set& lexicons,
                              const pipeline_config& cfg);

}  // namespace pntag
