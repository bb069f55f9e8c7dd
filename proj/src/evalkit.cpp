#include "pntag/evalkit.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace pntag {

namespace {

struct tagged_line {
  std::string surface;
  bool ne = false;
  int line_no = 0;
};

std::vector<tagged_line> read_tagged(std::istream& in, const char* label) {
  std::vector<tagged_line> lines;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;  // sentence break
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw std::runtime_error(std::string(label) + ": line " +
                               std::to_string(line_no) +
                               ": expected surface<TAB>tag");
    std::string tag = line.substr(tab + 1);
    if (tag != "NE" && tag != "O")
      throw std::runtime_error(std::string(label) + ": line " +
                               std::to_string(line_no) + ": unknown tag '" +
                               tag + "'");
    lines.push_back({line.substr(0, tab), tag == "NE", line_no});
  }
  return lines;
}

}  // namespace

eval_counts compare_gold(std::istream& system_stream,
                         std::istream& gold_stream) {
  auto system = read_tagged(system_stream, "system");
  auto gold = read_tagged(gold_stream, "gold");
  std::size_t n = std::min(system.size(), gold.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (system[i].surface != gold[i].surface)
      throw std::runtime_error(
          "token mismatch at position " + std::to_string(i + 1) +
          " (system line " + std::to_string(system[i].line_no) +
          ", gold line " + std::to_string(gold[i].line_no) + "): '" +
          system[i].surface + "' vs '" + gold[i].surface + "'");
  }
  if (system.size() != gold.size())
    throw std::runtime_error(
        "token mismatch at position " + std::to_string(n + 1) +
        ": streams have " + std::to_string(system.size()) + " vs " +
        std::to_string(gold.size()) + " tokens");

  eval_counts c;
  for (std::size_t i = 0; i < n; ++i) {
    if (gold[i].ne) {
      ++c.gold_pn_tokens;
      if (!system[i].ne) ++c.missed;
    } else if (system[i].ne) {
      ++c.wrong;
    }
  }
  return c;
}

double recognition_rate(const eval_counts& c) {
  if (c.gold_pn_tokens <= 0)
    throw std::invalid_argument("recognition_rate: no gold proper names");
  return static_cast<double>(c.gold_pn_tokens - c.missed) /
         static_cast<double>(c.gold_pn_tokens);
}

double precision(const eval_counts& c) {
  long system_ne = c.gold_pn_tokens - c.missed + c.wrong;
  if (system_ne <= 0)
    throw std::invalid_argument("precision: system tagged no proper names");
  return static_cast<double>(system_ne - c.wrong) /
         static_cast<double>(system_ne);
}

void report_unresolved(const std::vector<hypothesis>& hypotheses,
                       std::ostream& out) {
  struct row {
    std::string doc_id;
    std::string pair;
    int count = 0;
    int doc_index = 0;
    long first_seq = 0;
  };
  std::map<std::tuple<int, std::string, std::string>, row> rows;
  for (const auto& h : hypotheses) {
    if (h.status != hypothesis_status::unresolved) continue;
    for (const auto& occ : h.occurrences) {
      auto key = std::make_tuple(occ.doc_index, h.left, h.right);
      auto it = rows.find(key);
      if (it == rows.end()) {
        rows.emplace(std::move(key), row{occ.doc_id, h.left + " " + h.right,
                                         1, occ.doc_index, occ.seq});
      } else {
        ++it->second.count;
        it->second.first_seq = std::min(it->second.first_seq, occ.seq);
      }
    }
  }
  std::vector<const row*> ordered;
  ordered.reserve(rows.size());
  for (const auto& [key, r] : rows) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(), [](const row* a, const row* b) {
    return std::tie(a->doc_index, a->first_seq) <
           std::tie(b->doc_index, b->first_seq);
  });
  for (const row* r : ordered) {
    out << r->doc_id << '\t' << r->pair;
    if (r->count > 1) out << '\t' << r->count;
    out << '\n';
  }
}

}  // namespace pntag
