#include "pntag/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pntag/evalkit.hpp"

namespace pntag::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read input file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);  // UTF-8 BOM
  return text;
}

lexicon load_lexicon_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read lexicon file: " + path.string());
  try {
    return load_lexicon(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

pipeline_config make_pipeline_config(const run_config& cfg) {
  pipeline_config pc = pipeline_config::defaults();
  pc.max_iterations = cfg.max_iterations;
  pc.min_evidence = cfg.min_evidence;
  if (!cfg.stoplist_path.empty()) {
    std::ifstream in(cfg.stoplist_path);
    if (!in)
      throw std::runtime_error("cannot read stop list: " +
                               cfg.stoplist_path.string());
    pc.stoplist = load_stoplist(in);
  }
  if (!cfg.affix_config_path.empty()) {
    std::ifstream in(cfg.affix_config_path);
    if (!in)
      throw std::runtime_error("cannot read affix config: " +
                               cfg.affix_config_path.string());
    pc.affixes = load_affix_config(in);
  }
  return pc;
}

corpus load_corpus(const std::vector<fs::path>& inputs,
                   const word_set& abbreviations) {
  std::vector<std::pair<std::string, std::string>> docs;
  docs.reserve(inputs.size());
  for (const auto& path : inputs)
    docs.emplace_back(path.stem().string(), read_file(path));
  return build_corpus(docs, abbreviations);
}

// All outputs go to temp names first and are renamed together at the end,
// so a failed run leaves no partial files behind.
class output_stage {
 public:
  explicit output_stage(fs::path dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
  }
  ~output_stage() {
    for (const auto& [tmp, final_name] : pending_) {
      std::error_code ec;
      (void)final_name;
      fs::remove(tmp, ec);
    }
  }

  template <typename WriteFn>
  void write(const std::string& name, WriteFn&& fn) {
    fs::path tmp = dir_ / (name + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary);
      if (!out)
        throw std::runtime_error("cannot write output file: " + tmp.string());
      fn(out);
      if (!out)
        throw std::runtime_error("write failed: " + tmp.string());
    }
    pending_.emplace_back(tmp, dir_ / name);
  }

  void commit() {
    for (auto& [tmp, final_name] : pending_) {
      (void)tmp;
      if (fs::is_directory(final_name))
        throw std::runtime_error("output path is a directory: " +
                                 final_name.string());
    }
    for (auto& [tmp, final_name] : pending_) fs::rename(tmp, final_name);
    pending_.clear();
  }

 private:
  fs::path dir_;
  std::vector<std::pair<fs::path, fs::path>> pending_;
};

}  // namespace

int run_tag(const run_config& cfg, const std::vector<fs::path>& inputs) {
  lexicon_set lexicons;
  lexicons.mc = load_lexicon_file(cfg.mc_lexicon_path);
  if (!cfg.pn_lexicon_path.empty())
    lexicons.pn = load_lexicon_file(cfg.pn_lexicon_path);
  pipeline_config pc = make_pipeline_config(cfg);

  corpus corp = load_corpus(inputs, lexicons.mc.abbreviations());
  corpus_indexes idx = build_indexes(corp, pc);
  int definite_new = definite_pn_pass(corp, lexicons.mc, lexicons.pn, pc);
  fixpoint_result fixpoint = run_fixpoint(corp, idx, lexicons, pc);

  output_stage stage(cfg.output_dir);
  stage.write("tagged.tsv",
              [&](std::ostream& out) { write_tagged(corp, lexicons.pn, out); });
  stage.write("pn_lexicon.tsv",
              [&](std::ostream& out) { save_lexicon(lexicons.pn, out); });
  stage.write("mcpot_lexicon.tsv",
              [&](std::ostream& out) { save_lexicon(lexicons.mcpot, out); });
  stage.write("stats.tsv",
              [&](std::ostream& out) { write_stats(fixpoint.stats, out); });
  stage.write("unresolved.tsv", [&](std::ostream& out) {
    report_unresolved(fixpoint.final_hypotheses, out);
  });
  if (cfg.dump_index)
    stage.write("cap_index.tsv",
                [&](std::ostream& out) { dump_cap_index(idx.caps, out); });
  stage.commit();

  std::cerr << "definite pass: " << definite_new << " proper names, "
            << fixpoint.stats.iterations.size() << " iteration(s)\n";
  if (fixpoint.stats.iteration_cap_hit)
    std::cerr << "warning: iteration cap reached before pn_new = 0\n";
  return 0;
}

int run_eval(const fs::path& gold_path, const fs::path& system_path) {
  std::ifstream gold(gold_path);
  if (!gold)
    throw std::runtime_error("cannot read gold file: " + gold_path.string());
  std::ifstream system(system_path);
  if (!system)
    throw std::runtime_error("cannot read system file: " +
                             system_path.string());
  eval_counts c = compare_gold(system, gold);
  long system_ne = c.gold_pn_tokens - c.missed + c.wrong;
  char buf[32];
  std::printf("gold_pn_tokens\t%ld\n", c.gold_pn_tokens);
  std::printf("missed\t%ld\n", c.missed);
  std::printf("wrong\t%ld\n", c.wrong);
  std::snprintf(buf, sizeof buf, "%.4f", recognition_rate(c));
  std::printf("recall\t%s\n", buf);
  if (system_ne > 0) {
    std::snprintf(buf, sizeof buf, "%.4f", precision(c));
    std::printf("precision\t%s\n", buf);
  }
  return 0;
}

int run_dump_index(const run_config& cfg, const std::vector<fs::path>& inputs) {
  word_set abbreviations;
  if (!cfg.mc_lexicon_path.empty())
    abbreviations = load_lexicon_file(cfg.mc_lexicon_path).abbreviations();
  pipeline_config pc = make_pipeline_config(cfg);
  corpus corp = load_corpus(inputs, abbreviations);
  cap_index caps =
      build_cap_index(corp, pc.hypothesis_prepositions, pc.articles);
  dump_cap_index(caps, std::cout);
  return 0;
}

}  // namespace pntag::cli
