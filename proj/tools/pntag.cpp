#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pntag/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pntag - incremental proper-name tagger for German text"};
  app.require_subcommand(1);

  pntag::cli::run_config cfg;
  std::vector<std::string> inputs;
  std::string mc_lexicon, pn_lexicon, affixes, stoplist, out_dir;
  std::string gold_path, system_path;

  auto* tag = app.add_subcommand("tag", "tag proper names in text files");
  tag->add_option("inputs", inputs, "input text files, one document each")
      ->required();
  tag->add_option("--mc-lexicon", mc_lexicon, "seed minimal-context lexicon")
      ->required();
  tag->add_option("--pn-lexicon", pn_lexicon, "seed proper-name lexicon");
  tag->add_option("--affixes", affixes, "affix configuration (INI)");
  tag->add_option("--stoplist", stoplist, "stop list (TSV)");
  tag->add_option("--out", out_dir, "output directory")->required();
  tag->add_option("--max-iter", cfg.max_iterations, "iteration cap")
      ->check(CLI::PositiveNumber);
  tag->add_option("--min-evidence", cfg.min_evidence,
                  "distinct contexts required by the distributional rule")
      ->check(CLI::PositiveNumber);
  tag->add_flag("--dump-index", cfg.dump_index,
                "also write the capitalized-word context index");

  auto* eval = app.add_subcommand("eval", "score tagged output against gold");
  eval->add_option("--gold", gold_path, "gold tagged file")->required();
  eval->add_option("--system", system_path, "system tagged file")->required();

  auto* dump =
      app.add_subcommand("dump-index", "print the capitalized-word index");
  dump->add_option("inputs", inputs, "input text files")->required();
  dump->add_option("--mc-lexicon", mc_lexicon,
                   "minimal-context lexicon (for abbreviations)");
  dump->add_option("--stoplist", stoplist, "stop list (TSV)");
  dump->add_option("--affixes", affixes, "affix configuration (INI)");

  CLI11_PARSE(app, argc, argv);

  cfg.mc_lexicon_path = mc_lexicon;
  cfg.pn_lexicon_path = pn_lexicon;
  cfg.affix_config_path = affixes;
  cfg.stoplist_path = stoplist;
  cfg.output_dir = out_dir;
  std::vector<std::filesystem::path> input_paths(inputs.begin(), inputs.end());

  try {
    if (tag->parsed()) return pntag::cli::run_tag(cfg, input_paths);
    if (eval->parsed()) return pntag::cli::run_eval(gold_path, system_path);
    if (dump->parsed()) return pntag::cli::run_dump_index(cfg, input_paths);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
