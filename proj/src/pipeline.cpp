#include "pntag/pipeline.hpp"

#include <map>
#include <ostream>
#include <tuple>

#include "pntag/textutil.hpp"

namespace pntag {

namespace {

struct pn_proposal {
  std::string surface;
  entry_category subkind = entry_category::unknown;
  std::string rule_id;
  std::string doc_id;
};

struct mcpot_proposal {
  std::string surface;
  std::string doc_id;
};

struct proposals {
  std::vector<pn_proposal> pn;
  std::vector<mcpot_proposal> mcpot;
};

bool is_quote(const token& t) {
  return t.kind == token_kind::punctuation &&
         (t.surface == "\"" || t.surface == "„" ||
          t.surface == "“" || t.surface == "”" ||
          t.surface == "‘" || t.surface == "’" ||
          t.surface == "«" || t.surface == "»");
}

// Applies buffered additions in first-occurrence order. Stop-listed words
// never enter the PN-lexicon, whatever proposed them.
std::pair<int, int> apply_proposals(const proposals& props,
                                    lexicon_set& lexicons,
                                    const pipeline_config& cfg) {
  int pn_new = 0;
  int mcpot_new = 0;
  for (const auto& p : props.pn) {
    if (cfg.stoplist.count(p.surface) > 0) continue;
    lexicon_entry entry;
    entry.category = p.subkind;
    entry.origin = entry_origin::harvested;
    entry.first_seen_doc = p.doc_id;
    entry.evidence.emplace_back(p.rule_id, p.doc_id);
    if (lexicons.pn.add(p.surface, std::move(entry))) ++pn_new;
  }
  for (const auto& m : props.mcpot) {
    lexicon_entry entry;
    entry.category = entry_category::mcpot;
    entry.origin = entry_origin::harvested;
    entry.first_seen_doc = m.doc_id;
    if (lexicons.mcpot.add(m.surface, std::move(entry))) ++mcpot_new;
  }
  return {pn_new, mcpot_new};
}

// Is the occurrence's token a PN-lexicon word, and if so, is it genitive?
enum class pn_occurrence { none, plain, genitive };

pn_occurrence classify_pn_occurrence(const token& tok, const lexicon& pn) {
  if (!is_capitalized(tok)) return pn_occurrence::none;
  if (pn.contains(tok.normalized)) return pn_occurrence::plain;
  if (auto base = strip_genitive(tok.normalized); base && pn.contains(*base))
    return pn_occurrence::genitive;
  return pn_occurrence::none;
}

void collect_mcpot_into(const corpus& corp, const lexicon& pn,
                        proposals& out, const pipeline_config& cfg) {
  for (const auto& doc : corp.documents) {
    for (const auto& sent : doc.sentences) {
      const auto& t = sent.tokens;
      for (std::size_t i = 0; i < t.size(); ++i) {
        auto kind = classify_pn_occurrence(t[i], pn);
        if (kind != pn_occurrence::plain) continue;  // genitives excluded
        int taken = 0;
        for (std::size_t j = i; j > 0 && taken < cfg.mcpot_window; --j) {
          const token& prev = t[j - 1];
          if (!is_capitalized(prev)) break;
          ++taken;
          if (!pn.contains(prev.normalized))
            out.mcpot.push_back({prev.normalized, doc.doc_id});
        }
      }
    }
  }
}

void place_name_pass_into(const corpus& corp, const word_set& vocabulary,
                          const word_set& place_preps, proposals& out,
                          const pipeline_config& cfg) {
  for (const auto& doc : corp.documents) {
    for (const auto& sent : doc.sentences) {
      const auto& t = sent.tokens;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!is_capitalized(t[i])) continue;
        if (i + 1 < t.size() && is_capitalized(t[i + 1])) {
          if (auto base =
                  adjectival_base(t[i].normalized, vocabulary, cfg.affixes))
            out.pn.push_back({*base, entry_category::place,
                              "adjectival-base", doc.doc_id});
        }
        if (i > 0 && place_preps.count(t[i - 1].normalized) > 0 &&
            has_onomastic_affix(t[i].normalized, cfg.affixes))
          out.pn.push_back({t[i].normalized, entry_category::place,
                            "onomastic-affix", doc.doc_id});
      }
    }
  }
}

bool is_adjective_slot(const token& tok, const affix_config& affixes) {
  if (tok.kind != token_kind::word) return false;
  if (text::starts_lower(tok.normalized)) return true;
  // Capitalized place-derived adjectives ("des Schweizer ...") keep their
  // capital in German.
  if (!is_capitalized(tok)) return false;
  for (const auto& ending : affixes.adjectival_endings)
    if (tok.normalized.size() > ending.size() &&
        tok.normalized.compare(tok.normalized.size() - ending.size(),
                               ending.size(), ending) == 0)
      return true;
  return false;
}

// <article> <Cap> (<gen-article> [adj] <Cap>)? directly before the comma.
bool apposition_left_context(const std::vector<token>& t, std::size_t comma,
                             const pipeline_config& cfg) {
  if (comma < 2) return false;
  const auto norm = [&](std::size_t i) -> const std::string& {
    return t[i].normalized;
  };
  std::size_t i = comma - 1;
  if (!is_capitalized(t[i])) return false;
  if (i == 0) return false;
  std::size_t j = i - 1;
  if (cfg.articles.count(norm(j)) > 0 &&
      cfg.genitive_articles.count(norm(j)) == 0)
    return true;  // <article> <Cap> ","
  std::size_t gen = j;
  if (cfg.genitive_articles.count(norm(gen)) == 0) {
    if (!is_adjective_slot(t[j], cfg.affixes) || j == 0) return false;
    gen = j - 1;
    if (cfg.genitive_articles.count(norm(gen)) == 0) return false;
  }
  if (gen < 2) return false;
  return is_capitalized(t[gen - 1]) && cfg.articles.count(norm(gen - 2)) > 0;
}

void apposition_pass_into(const corpus& corp, const lexicon& mcpot,
                          proposals& out, const pipeline_config& cfg) {
  for (const auto& doc : corp.documents) {
    for (const auto& sent : doc.sentences) {
      const auto& t = sent.tokens;
      std::vector<std::size_t> commas;
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i].kind == token_kind::punctuation && t[i].surface == ",")
          commas.push_back(i);
      for (std::size_t c = 0; c + 1 < commas.size(); ++c) {
        std::size_t c1 = commas[c];
        std::size_t c2 = commas[c + 1];
        if (!apposition_left_context(t, c1, cfg)) continue;
        // Slot between the commas, parentheticals dropped.
        std::vector<const token*> slot;
        bool in_parens = false;
        bool ok = true;
        for (std::size_t i = c1 + 1; i < c2 && ok; ++i) {
          if (t[i].surface == "(") {
            in_parens = true;
          } else if (t[i].surface == ")") {
            in_parens = false;
          } else if (!in_parens) {
            if (is_capitalized(t[i]))
              slot.push_back(&t[i]);
            else
              ok = false;
          }
        }
        if (!ok || slot.empty()) continue;
        out.pn.push_back({slot.back()->normalized, entry_category::person,
                          "apposition", doc.doc_id});
        for (std::size_t i = 0; i + 1 < slot.size(); ++i)
          if (matches_mcpot_derived(slot[i]->normalized, mcpot))
            out.mcpot.push_back({slot[i]->normalized, doc.doc_id});
      }
    }
  }
}

void evaluate_all(const corpus_indexes& idx, const lexicon_set& lexicons,
                  const pipeline_config& cfg, std::vector<hypothesis>& hyps,
                  proposals& out) {
  for (auto& h : hyps) {
    if (h.status != hypothesis_status::pending) continue;
    decision d = evaluate_hypothesis(h, lexicons.pn, lexicons.mcpot, idx.caps,
                                     idx.vocabulary, cfg);
    switch (d.outcome) {
      case decision_outcome::accept_pn:
        h.status = hypothesis_status::accepted;
        h.rule_fired = d.rule_id;
        out.pn.push_back({*d.new_pn, d.pn_subkind, d.rule_id, h.doc_id});
        for (const auto& m : d.new_mcpots)
          out.mcpot.push_back({m, h.doc_id});
        break;
      case decision_outcome::reject:
        h.status = hypothesis_status::rejected;
        h.rule_fired = d.rule_id;
        break;
      case decision_outcome::unresolved:
        h.status = hypothesis_status::unresolved;
        break;
    }
  }
}

}  // namespace

word_set default_articles() {
  return {"der", "die", "das", "des", "dem", "den",
          "ein", "eine", "einer", "eines", "einem", "einen"};
}

word_set default_hypothesis_prepositions() {
  return {"an",   "auf",  "aus",   "bei",  "durch", "für",  "gegen",
          "hinter", "in",  "mit",   "nach", "neben", "ohne", "seit",
          "um",   "unter", "von",  "vor",  "zu",    "zwischen", "über"};
}

pipeline_config pipeline_config::defaults() {
  pipeline_config cfg;
  cfg.articles = default_articles();
  cfg.hypothesis_prepositions = default_hypothesis_prepositions();
  cfg.genitive_articles = {"des", "eines"};
  cfg.stoplist = default_stoplist();
  cfg.affixes = affix_config::defaults();
  return cfg;
}

corpus_indexes build_indexes(const corpus& corp, const pipeline_config& cfg) {
  corpus_indexes idx;
  idx.vocabulary = build_vocabulary(corp);
  idx.caps = build_cap_index(corp, cfg.hypothesis_prepositions, cfg.articles);
  return idx;
}

int definite_pn_pass(const corpus& corp, const lexicon& mc, lexicon& pn,
                     const pipeline_config& cfg) {
  const word_set person_contexts = mc.surfaces_with(
      {entry_category::title, entry_category::address_form,
       entry_category::apposition_noun});
  const word_set speech_verbs = mc.surfaces_with({entry_category::speech_verb});
  const word_set place_preps = mc.surfaces_with({entry_category::preposition});
  const auto frames = mc.frames();

  int added = 0;
  const auto add = [&](const std::string& surface, entry_category subkind,
                       const char* rule, const std::string& doc_id) {
    if (cfg.stoplist.count(surface) > 0) return;
    lexicon_entry entry;
    entry.category = subkind;
    entry.origin = entry_origin::harvested;
    entry.first_seen_doc = doc_id;
    entry.evidence.emplace_back(rule, doc_id);
    if (pn.add(surface, std::move(entry))) ++added;
  };

  for (const auto& doc : corp.documents) {
    for (const auto& sent : doc.sentences) {
      const auto& t = sent.tokens;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!is_capitalized(t[i])) continue;
        const std::string& w = t[i].normalized;
        const token* prev = i > 0 ? &t[i - 1] : nullptr;
        const token* prev2 = i > 1 ? &t[i - 2] : nullptr;
        const token* next = i + 1 < t.size() ? &t[i + 1] : nullptr;

        if (prev != nullptr && person_contexts.count(prev->normalized) > 0) {
          add(w, entry_category::person, "mc-context", doc.doc_id);
          continue;
        }
        if (next != nullptr && speech_verbs.count(next->normalized) > 0) {
          add(w, entry_category::person, "speech-verb-follows", doc.doc_id);
          continue;
        }
        if (prev != nullptr && prev2 != nullptr &&
            speech_verbs.count(prev->normalized) > 0 &&
            prev2->normalized == "so") {
          add(w, entry_category::person, "so-speech-verb", doc.doc_id);
          continue;
        }

        bool prep_context =
            prev != nullptr && place_preps.count(prev->normalized) > 0;
        bool frame_context = false;
        if (prev != nullptr && prev2 != nullptr) {
          for (const auto& [first, second] : frames)
            if (prev2->normalized == first && prev->normalized == second) {
              frame_context = true;
              break;
            }
        }
        if (prep_context || frame_context) {
          // Fixed syntagms and genitive constructions are hypothesis
          // material, not definite names.
          if (next != nullptr &&
              cfg.genitive_articles.count(next->normalized) > 0)
            continue;
          if (next != nullptr && next->kind == token_kind::word &&
              is_past_participle(next->normalized, cfg.affixes))
            continue;
          if (strip_genitive(w) && next != nullptr && is_capitalized(*next))
            continue;
          add(w, entry_category::place,
              frame_context ? "prep-frame" : "place-prep", doc.doc_id);
        }
      }
    }
  }
  return added;
}

int collect_mcpot(const corpus& corp, const lexicon& pn, lexicon& mcpot,
                  const pipeline_config& cfg) {
  proposals props;
  collect_mcpot_into(corp, pn, props, cfg);
  lexicon_set tmp;
  tmp.mcpot = std::move(mcpot);
  auto [pn_new, mcpot_new] = apply_proposals(props, tmp, cfg);
  (void)pn_new;
  mcpot = std::move(tmp.mcpot);
  return mcpot_new;
}

int place_name_pass(const corpus& corp, lexicon& pn,
                    const word_set& vocabulary, const word_set& place_preps,
                    const pipeline_config& cfg) {
  proposals props;
  place_name_pass_into(corp, vocabulary, place_preps, props, cfg);
  lexicon_set tmp;
  tmp.pn = std::move(pn);
  auto [pn_new, mcpot_new] = apply_proposals(props, tmp, cfg);
  (void)mcpot_new;
  pn = std::move(tmp.pn);
  return pn_new;
}

int apposition_pass(const corpus& corp, lexicon& pn, lexicon& mcpot,
                    const pipeline_config& cfg) {
  proposals props;
  apposition_pass_into(corp, mcpot, props, cfg);  // scans a frozen snapshot
  lexicon_set tmp;
  tmp.pn = std::move(pn);
  tmp.mcpot = std::move(mcpot);
  auto [pn_new, mcpot_new] = apply_proposals(props, tmp, cfg);
  (void)mcpot_new;
  pn = std::move(tmp.pn);
  mcpot = std::move(tmp.mcpot);
  return pn_new;
}

std::vector<hypothesis> generate_hypotheses(const corpus& corp,
                                            const lexicon& pn,
                                            const pipeline_config& cfg) {
  std::vector<hypothesis> hyps;
  std::map<std::tuple<hypothesis_kind, std::string, std::string>, std::size_t>
      index;
  long seq = 0;
  int doc_index = 0;
  for (const auto& doc : corp.documents) {
    int sentence_no = 0;
    for (const auto& sent : doc.sentences) {
      const auto& t = sent.tokens;
      int quotes_seen = 0;
      for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (is_quote(t[i])) ++quotes_seen;
        bool left_cap = is_capitalized(t[i]);
        bool right_cap = is_capitalized(t[i + 1]);
        hypothesis_kind kind;
        if (left_cap && right_cap) {
          kind = hypothesis_kind::cap_pair;
        } else if (right_cap && t[i].kind == token_kind::word &&
                   cfg.hypothesis_prepositions.count(t[i].normalized) > 0) {
          kind = hypothesis_kind::prep_cap;
        } else {
          continue;
        }
        const std::string& left = t[i].normalized;
        const std::string& right = t[i + 1].normalized;
        const token* next = i + 2 < t.size() ? &t[i + 2] : nullptr;

        auto [it, inserted] =
            index.emplace(std::make_tuple(kind, left, right), hyps.size());
        if (inserted) {
          hypothesis h;
          h.kind = kind;
          h.left = left;
          h.right = right;
          h.doc_id = doc.doc_id;
          h.sentence_no = sentence_no;
          if (kind == hypothesis_kind::cap_pair && pn.contains(left)) {
            h.status = hypothesis_status::rejected;
            h.rule_fired = "left-in-pn";
          }
          hyps.push_back(std::move(h));
        }
        hypothesis& h = hyps[it->second];
        h.occurrences.push_back({doc.doc_id, doc_index, sentence_no, seq++});
        if (quotes_seen % 2 == 1) h.in_quotes = true;
        if (next != nullptr) {
          if (cfg.genitive_articles.count(next->normalized) > 0)
            h.followed_by_genitive_article = true;
          if (next->kind == token_kind::word &&
              is_past_participle(next->normalized, cfg.affixes))
            h.followed_by_participle = true;
          if (is_capitalized(*next)) h.followed_by_capitalized = true;
        }
      }
      ++sentence_no;
    }
    ++doc_index;
  }
  return hyps;
}

decision evaluate_hypothesis(const hypothesis& h, const lexicon& pn,
                             const lexicon& mcpot, const cap_index& caps,
                             const word_set& vocabulary,
                             const pipeline_config& cfg) {
  decision d;
  const auto reject = [&](const char* rule, std::string reason) {
    d.outcome = decision_outcome::reject;
    d.rule_id = rule;
    d.reason = std::move(reason);
    return d;
  };
  const auto accept = [&](const char* rule, std::string name,
                          entry_category subkind, std::string reason) {
    d.outcome = decision_outcome::accept_pn;
    d.rule_id = rule;
    d.new_pn = std::move(name);
    d.pn_subkind = subkind;
    d.reason = std::move(reason);
    return d;
  };

  if (h.kind == hypothesis_kind::cap_pair) {
    if (pn.contains(h.left))
      return reject("left-in-pn", "left word already a proper name");
    if (impossible_pn_inflection(h.right, vocabulary, cfg.affixes))
      return reject("impossible-inflection",
                    "right word carries an inflection not possible for "
                    "proper names");
    if (cfg.stoplist.count(h.right) > 0)
      return reject("stoplist", "right word is stop-listed");
    if (auto m = matches_mcpot_derived(h.left, mcpot)) {
      d.new_mcpots.push_back(h.left);
      return accept("mcpot-derived", h.right, entry_category::person,
                    "left word derived from minimal context '" + *m + "'");
    }
    if (auto base = strip_genitive(h.right); base && vocabulary.count(*base))
      return accept("genitive-base", *base, entry_category::unknown,
                    "genitive form whose base occurs in the corpus");
    d.outcome = decision_outcome::unresolved;
    d.reason = "no rule matched";
    return d;
  }

  // prep_cap
  if (mcpot.contains(h.right))
    return reject("mcpot-right", "right word is a potential minimal context");
  if (h.followed_by_genitive_article)
    return reject("genitive-article-follows", "fixed syntagm: genitive "
                                              "article follows");
  if (h.followed_by_participle)
    return reject("participle-follows", "fixed syntagm: past participle "
                                        "follows");
  if (cfg.stoplist.count(h.right) > 0)
    return reject("stoplist", "right word is stop-listed");
  if (auto base = strip_genitive(h.right);
      base && h.followed_by_capitalized)
    return accept("genitive-before-capitalized", *base,
                  entry_category::unknown,
                  "genitive name before a capitalized word");
  if (caps.article_count(h.right) == 0 &&
      caps.distinct_preceding(h.right) >= cfg.min_evidence)
    return accept("distributional", h.right, entry_category::unknown,
                  "never with an article, enough capitalized or "
                  "prepositional contexts");
  d.outcome = decision_outcome::unresolved;
  d.reason = "no rule matched";
  return d;
}

fixpoint_result run_fixpoint(const corpus& corp, const corpus_indexes& idx,
                             lexicon_set& lexicons,
                             const pipeline_config& cfg) {
  fixpoint_result result;
  const word_set place_preps =
      lexicons.mc.surfaces_with({entry_category::preposition});
  for (int iteration = 1; iteration <= cfg.max_iterations; ++iteration) {
    proposals props;
    collect_mcpot_into(corp, lexicons.pn, props, cfg);
    place_name_pass_into(corp, idx.vocabulary, place_preps, props, cfg);
    apposition_pass_into(corp, lexicons.mcpot, props, cfg);
    auto hyps = generate_hypotheses(corp, lexicons.pn, cfg);
    evaluate_all(idx, lexicons, cfg, hyps, props);
    auto [pn_new, mcpot_new] = apply_proposals(props, lexicons, cfg);
    result.stats.iterations.push_back(
        {pn_new, mcpot_new, static_cast<int>(hyps.size())});
    result.final_hypotheses = std::move(hyps);
    if (pn_new == 0) return result;
  }
  result.stats.iteration_cap_hit = true;
  return result;
}

std::string_view tag_of(const token& tok, const lexicon& pn) {
  if (pn.contains(tok.normalized)) return "NE";
  if (auto base = strip_genitive(tok.normalized);
      base && pn.contains(*base))
    return "NE";
  return "O";
}

void write_tagged(const corpus& corp, const lexicon& pn, std::ostream& out) {
  bool first_sentence = true;
  for (const auto& doc : corp.documents) {
    for (const auto& sent : doc.sentences) {
      if (!first_sentence) out << '\n';
      first_sentence = false;
      for (const auto& tok : sent.tokens)
        out << tok.surface << '\t' << tag_of(tok, pn) << '\n';
    }
  }
}

void write_stats(const fixpoint_stats& stats, std::ostream& out) {
  int n = 1;
  for (const auto& it : stats.iterations)
    out << n++ << '\t' << it.pn_new << '\t' << it.mcpot_new << '\t'
        << it.hypotheses_evaluated << '\n';
}

pipeline_outcome run_pipeline(const corpus& corp, lexicon_set& lexicons,
                              const pipeline_config& cfg) {
  pipeline_outcome outcome;
  corpus_indexes idx = build_indexes(corp, cfg);
  outcome.definite_new =
      definite_pn_pass(corp, lexicons.mc, lexicons.pn, cfg);
  outcome.fixpoint = run_fixpoint(corp, idx, lexicons, cfg);
  return outcome;
}

}  // namespace pntag
