#include "pntag/lexicon.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace pntag {

namespace {

constexpr std::array<std::pair<entry_category, std::string_view>, 10>
    kCategoryNames{{
        {entry_category::title, "title"},
        {entry_category::address_form, "address_form"},
        {entry_category::apposition_noun, "apposition_noun"},
        {entry_category::speech_verb, "speech_verb"},
        {entry_category::preposition, "preposition"},
        {entry_category::preposition_frame, "preposition_frame"},
        {entry_category::person, "person"},
        {entry_category::place, "place"},
        {entry_category::unknown, "unknown"},
        {entry_category::mcpot, "mcpot"},
    }};

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n\f\v") != std::string_view::npos;
}

[[noreturn]] void fail_line(int line_no, const std::string& what) {
  throw std::runtime_error("lexicon: line " + std::to_string(line_no) + ": " +
                           what);
}

}  // namespace

std::string_view category_name(entry_category c) {
  for (auto [cat, name] : kCategoryNames)
    if (cat == c) return name;
  return "unknown";
}

std::optional<entry_category> parse_category(std::string_view name) {
  for (auto [cat, cname] : kCategoryNames)
    if (cname == name) return cat;
  return std::nullopt;
}

bool lexicon::add(std::string surface, lexicon_entry entry) {
  auto [it, inserted] = entries_.emplace(std::move(surface), std::move(entry));
  if (inserted) insertion_order_.push_back(it->first);
  return inserted;
}

bool lexicon::contains(const std::string& surface) const {
  return entries_.count(surface) > 0;
}

const lexicon_entry* lexicon::find(const std::string& surface) const {
  auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

word_set lexicon::surfaces_with(
    std::initializer_list<entry_category> cats) const {
  word_set out;
  for (const auto& [surface, entry] : entries_)
    for (auto c : cats)
      if (entry.category == c) out.insert(surface);
  return out;
}

std::vector<std::pair<std::string, std::string>> lexicon::frames() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [surface, entry] : entries_)
    if (entry.category == entry_category::preposition_frame &&
        entry.frame_second)
      out.emplace_back(surface, *entry.frame_second);
  return out;
}

word_set lexicon::abbreviations() const {
  word_set out;
  for (const auto& [surface, entry] : entries_)
    if (surface.size() > 1 && surface.back() == '.') out.insert(surface);
  return out;
}

bool operator==(const lexicon& a, const lexicon& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  for (; ia != a.entries_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second.category != ib->second.category) return false;
    if (ia->second.frame_second != ib->second.frame_second) return false;
  }
  return true;
}

lexicon load_lexicon(std::istream& in) {
  lexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto fields = split_tabs(line);
    if (fields.size() < 2 || fields.size() > 3)
      fail_line(line_no, "expected surface<TAB>category[<TAB>frame_second]");
    const std::string& surface = fields[0];
    if (surface.empty() || has_whitespace(surface))
      fail_line(line_no, "bad surface '" + surface + "'");
    auto cat = parse_category(fields[1]);
    if (!cat) fail_line(line_no, "unknown category '" + fields[1] + "'");

    lexicon_entry entry;
    entry.category = *cat;
    entry.origin = entry_origin::seed;
    if (*cat == entry_category::preposition_frame) {
      if (fields.size() != 3 || fields[2].empty() || has_whitespace(fields[2]))
        fail_line(line_no, "preposition_frame needs a frame_second word");
      entry.frame_second = fields[2];
    } else if (fields.size() == 3) {
      fail_line(line_no, "frame_second only valid for preposition_frame");
    }

    if (const auto* existing = lex.find(surface)) {
      if (existing->category != entry.category ||
          existing->frame_second != entry.frame_second)
        fail_line(line_no, "duplicate surface '" + surface +
                               "' with conflicting category");
      continue;  // idempotent re-add
    }
    lex.add(surface, std::move(entry));
  }
  return lex;
}

void save_lexicon(const lexicon& lex, std::ostream& out) {
  for (const auto& [surface, entry] : lex.entries()) {
    out << surface << '\t' << category_name(entry.category);
    if (entry.frame_second) out << '\t' << *entry.frame_second;
    out << '\n';
  }
}

word_set load_stoplist(std::istream& in) {
  word_set out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty() ||
        has_whitespace(fields[0]) ||
        (fields[1] != "month" && fields[1] != "quantity"))
      throw std::runtime_error("stoplist: line " + std::to_string(line_no) +
                               ": expected surface<TAB>(month|quantity)");
    out.insert(fields[0]);
  }
  return out;
}

word_set default_stoplist() {
  return {
      // month names; tagging them would corrupt evaluation
      "Januar", "Februar", "März", "April", "Mai", "Juni", "Juli", "August",
      "September", "Oktober", "November", "Dezember",
      // quantity terms
      "Dutzend", "Prozent", "Metern", "Mitte", "Ende",
  };
}

}  // namespace pntag
