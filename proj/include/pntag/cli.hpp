#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pntag/pipeline.hpp"

namespace pntag::cli {

struct run_config {
  std::filesystem::path mc_lexicon_path;            // required
  std::filesystem::path pn_lexicon_path;            // optional seed
  std::filesystem::path affix_config_path;          // optional, else defaults
  std::filesystem::path stoplist_path;              // optional, else defaults
  std::filesystem::path output_dir;
  int max_iterations = 50;
  int min_evidence = 2;
  bool dump_index = false;
};

// Tags the input documents into output_dir: tagged.tsv, pn_lexicon.tsv,
// mcpot_lexicon.tsv, stats.tsv, unresolved.tsv (cap_index.tsv with
// dump_index). Files appear only when the whole run succeeded. Returns the
// process exit status.
int run_tag(const run_config& cfg,
            const std::vector<std::filesystem::path>& inputs);

// Prints counts, recall and precision for a system/gold file pair.
int run_eval(const std::filesystem::path& gold_path,
             const std::filesystem::path& system_path);

// Prints the capitalized-word context index for the inputs.
int run_dump_index(const run_config& cfg,
                   const std::vector<std::filesystem::path>& inputs);

}  // namespace pntag::cli
