#include "pntag/corpus.hpp"

#include <algorithm>

#include "pntag/textutil.hpp"

namespace pntag {

namespace {

using text::decode_cp;

bool is_split_cp(char32_t cp) {
  switch (cp) {
    case U'.':
    case U',':
    case U';':
    case U':':
    case U'!':
    case U'?':
    case U'"':
    case U'\'':
    case U'(':
    case U')':
    case U'[':
    case U']':
    case 0x2014:  // em dash
    case 0x201E:  // „
    case 0x201C:  // “
    case 0x201D:  // ”
    case 0x2018:  // ‘
    case 0x2019:  // ’
    case 0x00AB:  // «
    case 0x00BB:  // »
      return true;
    default:
      return false;
  }
}

bool is_word_cp(char32_t cp) { return text::is_letter(cp) || text::is_digit(cp); }

token_kind classify(std::string_view surface) {
  bool all_punct = true;
  for (std::size_t i = 0; i < surface.size();) {
    auto [cp, len] = decode_cp(surface, i);
    if (is_word_cp(cp)) all_punct = false;
    i += len;
  }
  if (all_punct) return token_kind::punctuation;
  if (text::is_letter(decode_cp(surface, 0).cp)) return token_kind::word;
  return token_kind::number;
}

token make_token(std::string surface) {
  token t;
  t.kind = classify(surface);
  t.normalized = surface;
  t.surface = std::move(surface);
  return t;
}

// One whitespace-free chunk -> tokens. Hyphen runs collapse first, then
// punctuation is split off; a '.' stays attached when run+'.' is an
// abbreviation and nothing word-like follows it.
void tokenize_chunk(std::string_view chunk, const word_set& abbreviations,
                    std::vector<token>& out) {
  std::vector<std::pair<char32_t, std::string_view>> cps;
  for (std::size_t i = 0; i < chunk.size();) {
    auto [cp, len] = decode_cp(chunk, i);
    if (cp == U'-' && !cps.empty() && cps.back().first == U'-') {
      i += len;
      continue;
    }
    cps.emplace_back(cp, chunk.substr(i, len));
    i += len;
  }

  std::string run;
  const auto flush = [&] {
    if (!run.empty()) out.push_back(make_token(std::move(run)));
    run.clear();
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    auto [cp, bytes] = cps[i];
    if (!is_split_cp(cp)) {
      run.append(bytes);
      continue;
    }
    if (cp == U'.' && !run.empty() &&
        (i + 1 == cps.size() || is_split_cp(cps[i + 1].first)) &&
        abbreviations.count(run + ".") > 0) {
      run.push_back('.');
      continue;
    }
    flush();
    out.push_back(make_token(std::string(bytes)));
  }
  flush();
}

bool is_boundary(const token& t, const segment_options& opts) {
  if (t.kind != token_kind::punctuation) return false;
  if (t.surface == "." || t.surface == "!" || t.surface == "?") return true;
  return opts.colon_ends_sentence && t.surface == ":";
}

}  // namespace

std::vector<token> tokenize(std::string_view raw,
                            const word_set& abbreviations) {
  std::vector<token> out;
  for (auto chunk : text::split_whitespace(raw))
    tokenize_chunk(chunk, abbreviations, out);
  return out;
}

std::vector<sentence> segment_sentences(std::vector<token> tokens,
                                        const segment_options& opts) {
  std::vector<sentence> sentences;
  sentence cur;
  for (auto& t : tokens) {
    bool boundary = is_boundary(t, opts);
    cur.tokens.push_back(std::move(t));
    if (boundary) {
      sentences.push_back(std::move(cur));
      cur = {};
    }
  }
  if (!cur.tokens.empty()) sentences.push_back(std::move(cur));
  for (auto& s : sentences) {
    for (auto& t : s.tokens) {
      if (t.kind == token_kind::word) {
        t.sentence_initial = true;
        break;
      }
    }
  }
  return sentences;
}

std::string normalize_initial(std::string_view word,
                              const word_set& lowercase_words) {
  if (!text::starts_upper(word)) return std::string(word);
  std::string lowered = text::lower_first(word);
  if (lowercase_words.count(lowered) > 0) return lowered;
  return std::string(word);
}

void apply_initial_normalization(corpus& corp,
                                 const word_set& lowercase_words) {
  for (auto& doc : corp.documents)
    for (auto& sent : doc.sentences)
      for (auto& tok : sent.tokens)
        if (tok.sentence_initial && text::starts_upper(tok.surface))
          tok.normalized = normalize_initial(tok.surface, lowercase_words);
}

bool is_capitalized(const token& tok) {
  return tok.kind == token_kind::word &&
         text::starts_upper(tok.normalized) &&
         text::cp_length(tok.normalized) >= 2;
}

word_set sentence_internal_lowercase_words(const corpus& corp) {
  word_set words;
  for (const auto& doc : corp.documents)
    for (const auto& sent : doc.sentences)
      for (const auto& tok : sent.tokens)
        if (tok.kind == token_kind::word && !tok.sentence_initial &&
            text::starts_lower(tok.surface))
          words.insert(tok.surface);
  return words;
}

document build_document(std::string doc_id, std::string_view raw,
                        const word_set& abbreviations,
                        const segment_options& opts) {
  document doc;
  doc.doc_id = std::move(doc_id);
  doc.sentences = segment_sentences(tokenize(raw, abbreviations), opts);
  return doc;
}

corpus build_corpus(
    const std::vector<std::pair<std::string, std::string>>& docs,
    const word_set& abbreviations, const segment_options& opts) {
  corpus corp;
  corp.documents.reserve(docs.size());
  for (const auto& [id, raw] : docs)
    corp.documents.push_back(build_document(id, raw, abbreviations, opts));
  apply_initial_normalization(corp, sentence_internal_lowercase_words(corp));
  return corp;
}

}  // namespace pntag
