#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pntag/pipeline.hpp"

namespace pntag {

struct eval_counts {
  long gold_pn_tokens = 0;
  long missed = 0;  // gold NE, system O
  long wrong = 0;   // system NE, gold O
};

// Both streams in tagged format (surface<TAB>tag, blank sentence breaks).
// Throws when the token sequences diverge, naming the first bad position.
eval_counts compare_gold(std::istream& system_stream,
                         std::istream& gold_stream);

// (gold - missed) / gold. Throws when gold_pn_tokens is zero.
double recognition_rate(const eval_counts& c);

// (system NE - wrong) / system NE. Throws when the system tagged nothing.
double precision(const eval_counts& c);

// One line per distinct unresolved (doc, left, right):
// doc<TAB>left right[<TAB>count], ordered by document then first occurrence.
void report_unresolved(const std::vector<hypothesis>& hypotheses,
                       std::ostream& out);

}  // namespace pntag
