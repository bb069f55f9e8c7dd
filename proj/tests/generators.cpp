#include "generators.hpp"

namespace testgen {

namespace {

const std::vector<std::string> kNames = {
    "Wörner",  "Biehle", "Kelly",  "Apel",    "Maier",   "Koller",
    "Basten",  "Müller", "Binder", "Felder",  "Schmidt", "Weber",
    "Gerster", "Witt",   "Ristock", "Schumacher"};

const std::vector<std::string> kCapNouns = {
    "Minister",  "Präsident", "Partei",     "Regierung", "Stadt",
    "Bericht",   "Angaben",   "Strategie",  "Bilanz",    "Worten",
    "Lage",      "Plan",      "Erwägung",   "Erwägungen", "Rücksicht",
    "Raum",      "Anlaß",     "Kauf",       "Landtag",   "Esslingen",
    "Frankreichs", "Mainzer", "Mainz",      "Dutzend",   "Ende"};

const std::vector<std::string> kLower = {
    "der",  "die",   "das",    "ein",   "eine",  "und",   "oder", "hat",
    "kam",  "ging",  "sagte",  "fragte", "erklärte", "blieb", "heute",
    "dann", "nicht", "sich",   "man",   "es",    "wurde", "wenn", "daß",
    "genommen", "gewohnt", "so", "viele", "am"};

const std::vector<std::string> kPreps = {"bei", "aus",   "nach", "in",
                                         "gegen", "ohne", "mit",  "von",
                                         "an",  "zu"};

const std::vector<std::string> kPunct = {".", ",", "!", "?", "\""};

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& pool) {
  return pool[std::uniform_int_distribution<std::size_t>(
      0, pool.size() - 1)(rng)];
}

}  // namespace

std::string random_text(std::mt19937& rng, int max_tokens) {
  std::uniform_int_distribution<int> token_count(0, max_tokens);
  std::uniform_int_distribution<int> kind(0, 99);
  int n = token_count(rng);
  std::string out;
  int since_period = 0;
  for (int i = 0; i < n; ++i) {
    int k = kind(rng);
    const std::string* word;
    if (k < 30)
      word = &pick(rng, kNames);
    else if (k < 55)
      word = &pick(rng, kCapNouns);
    else if (k < 80)
      word = &pick(rng, kLower);
    else if (k < 92)
      word = &pick(rng, kPreps);
    else
      word = &pick(rng, kPunct);
    if (!out.empty()) out.push_back(' ');
    out += *word;
    ++since_period;
    if (since_period > 8 && kind(rng) < 40) {
      out += " .";
      since_period = 0;
    }
  }
  if (n > 0) out += " .";
  return out;
}

std::vector<std::pair<std::string, std::string>> random_docs(
    std::mt19937& rng, int max_tokens) {
  std::uniform_int_distribution<int> doc_count(1, 3);
  int docs = doc_count(rng);
  std::vector<std::pair<std::string, std::string>> out;
  int budget = max_tokens;
  for (int d = 0; d < docs; ++d) {
    int share = budget / (docs - d);
    out.emplace_back(std::to_string(d + 1), random_text(rng, share));
    budget -= share;
  }
  return out;
}

std::string random_raw_string(std::mt19937& rng, int max_chars) {
  static const std::string alphabet =
      "abcdefghij ABCDE .,;:!?\"'()[]-- äöüÄÖÜß 0123456789";
  std::vector<std::string> cps;
  for (std::size_t i = 0; i < alphabet.size();) {
    unsigned char b = alphabet[i];
    int len = b < 0x80 ? 1 : (b >> 5) == 0x6 ? 2 : 3;
    cps.push_back(alphabet.substr(i, len));
    i += len;
  }
  std::uniform_int_distribution<int> char_count(0, max_chars);
  std::uniform_int_distribution<std::size_t> pick_cp(0, cps.size() - 1);
  int n = char_count(rng);
  std::string out;
  for (int i = 0; i < n; ++i) out += cps[pick_cp(rng)];
  return out;
}

}  // namespace testgen
