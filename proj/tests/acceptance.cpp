// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "oracle.hpp"
#include "pntag/cli.hpp"
#include "pntag/evalkit.hpp"
#include "pntag/pipeline.hpp"

using namespace pntag;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = PNTAG_SOURCE_DIR;

int g_failed = 0;

void criterion(int n, bool ok, const std::string& what) {
  std::printf("criterion %d: %s - %s\n", n, ok ? "PASS" : "FAIL",
              what.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("pntag_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::set<std::string> pn_set(const lexicon& lex) {
  std::set<std::string> out;
  for (const auto& [surface, entry] : lex.entries()) {
    (void)entry;
    out.insert(surface);
  }
  return out;
}

lexicon load_file_lexicon(const fs::path& p) {
  std::ifstream in(p);
  return load_lexicon(in);
}

// ---- criterion 1: bundled example fixture against the golden lexicon ----

bool run_criterion_1(std::string& detail) {
  fs::path out = fresh_dir("c1");
  cli::run_config cfg;
  cfg.mc_lexicon_path = kSource / "data/mc_lexicon.tsv";
  cfg.stoplist_path = kSource / "data/stoplist.tsv";
  cfg.affix_config_path = kSource / "data/affixes.ini";
  cfg.output_dir = out;

  auto start = std::chrono::steady_clock::now();
  int status = cli::run_tag(
      cfg, {kSource / "tests/fixtures/acceptance/01-beispiele.txt",
            kSource / "tests/fixtures/acceptance/02-kontext.txt"});
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  std::string got = slurp(out / "pn_lexicon.tsv");
  std::string golden =
      slurp(kSource / "tests/fixtures/acceptance/golden_pn_lexicon.tsv");
  bool ok = status == 0 && got == golden && elapsed < 1.0;
  std::ostringstream d;
  d << "golden lexicon match in " << elapsed << "s";
  if (got != golden) {
    d << "; mismatch:\n--- got ---\n" << got << "--- want ---\n" << golden;
  }
  detail = d.str();
  return ok;
}

// ---- criterion 2: distributional false positive and its threshold ----

bool run_criterion_2(std::string& detail) {
  corpus corp = build_corpus(
      {{"01", "ohne Rücksicht auf die Kosten. aus Rücksicht handelte er "
              "nicht."}},
      {});
  // no place prepositions seeded: the decision is the distributional rule's
  lexicon_set loose;
  pipeline_config cfg = pipeline_config::defaults();
  run_pipeline(corp, loose, cfg);
  bool accepted = loose.pn.contains("Rücksicht");

  lexicon_set strict;
  pipeline_config strict_cfg = pipeline_config::defaults();
  strict_cfg.min_evidence = 3;
  run_pipeline(corp, strict, strict_cfg);
  bool suppressed = !strict.pn.contains("Rücksicht");

  detail = "Rücksicht accepted at min_evidence=2, suppressed at 3";
  return accepted && suppressed;
}

// ---- criterion 3: recognition rate arithmetic ----

bool run_criterion_3(std::string& detail) {
  double rate = recognition_rate({1300, 461, 30});
  std::ostringstream d;
  d << "recognition_rate(1300, 461, 30) = " << rate;
  detail = d.str();
  return rate > 0.6454 - 0.0005 && rate < 0.6454 + 0.0005;
}

// ---- criterion 4: the four-row context table ----

bool run_criterion_4(std::string& detail) {
  corpus corp = build_corpus(
      {{"table1",
        "bei ADN wurde gemeldet. die Nachrichtenagentur ADN meldete dies. "
        "nach Angaben der Agentur. am Donnerstag Angaben zu liefern war "
        "schwer. die Angaben kamen spät. aus Belgien kamen viele. in "
        "Belgien blieb es ruhig. FDP-Politker Baum sprach. der "
        "FDP-Abgeordnete Baum kam."}},
      {});
  cap_index idx = build_cap_index(corp, default_hypothesis_prepositions(),
                                  default_articles());
  using V = std::vector<std::string>;
  bool ok = idx.article_count("ADN") == 0 &&
            idx.preceding_contexts("ADN") == V{"bei", "Nachrichtenagentur"} &&
            idx.article_count("Angaben") == 1 &&
            idx.preceding_contexts("Angaben") == V{"nach", "Donnerstag"} &&
            idx.article_count("Belgien") == 0 &&
            idx.preceding_contexts("Belgien") == V{"aus", "in"} &&
            idx.article_count("Baum") == 0 &&
            idx.preceding_contexts("Baum") ==
                V{"FDP-Politker", "FDP-Abgeordnete"};
  detail = "article counts ADN 0, Angaben 1, Belgien 0, Baum 0 with exact "
           "preceding lists";
  return ok;
}

// ---- criterion 5: unresolved report row ----

bool run_criterion_5(std::string& detail) {
  fs::path out = fresh_dir("c5");
  fs::path input = out / "22.txt";
  {
    std::ofstream f(input);
    f << "die Frecce Tricolori flogen über dem Flugplatz.\n";
  }
  cli::run_config cfg;
  cfg.mc_lexicon_path = kSource / "data/mc_lexicon.tsv";
  cfg.output_dir = out / "run";
  int status = cli::run_tag(cfg, {input});
  std::string report = slurp(cfg.output_dir / "unresolved.tsv");
  detail = "unresolved.tsv holds exactly '22\\tFrecce Tricolori'";
  return status == 0 && report == "22\tFrecce Tricolori\n";
}

// ---- criterion 6: property suite ----

struct property_outcome {
  bool termination = true;
  bool monotone = true;
  bool deterministic = true;
  bool oracle_equal = true;
  bool tokenize_idempotent = true;
};

std::string serialize_run(const corpus& corp, lexicon_set& lexicons,
                          const pipeline_config& cfg) {
  auto outcome = run_pipeline(corp, lexicons, cfg);
  std::ostringstream buf;
  save_lexicon(lexicons.pn, buf);
  save_lexicon(lexicons.mcpot, buf);
  write_stats(outcome.fixpoint.stats, buf);
  write_tagged(corp, lexicons.pn, buf);
  report_unresolved(outcome.fixpoint.final_hypotheses, buf);
  return buf.str();
}

property_outcome run_properties() {
  property_outcome res;
  lexicon seed_mc = load_file_lexicon(kSource / "data/mc_lexicon.tsv");
  word_set abbrevs = seed_mc.abbreviations();
  pipeline_config cfg = pipeline_config::defaults();

  oracle::seeds oseeds;
  oseeds.person_contexts = seed_mc.surfaces_with(
      {entry_category::title, entry_category::address_form,
       entry_category::apposition_noun});
  oseeds.speech_verbs = seed_mc.surfaces_with({entry_category::speech_verb});
  oseeds.place_preps = seed_mc.surfaces_with({entry_category::preposition});
  oseeds.frames = seed_mc.frames();

  // (a) termination with pn_new = 0 within the cap, 1000 corpora
  {
    std::mt19937 rng(1001);
    for (int i = 0; i < 1000 && res.termination; ++i) {
      corpus corp = build_corpus(testgen::random_docs(rng, 100), abbrevs);
      lexicon_set lexicons;
      lexicons.mc = seed_mc;
      auto outcome = run_pipeline(corp, lexicons, cfg);
      const auto& stats = outcome.fixpoint.stats;
      if (stats.iteration_cap_hit || stats.iterations.empty() ||
          stats.iterations.back().pn_new != 0 ||
          static_cast<int>(stats.iterations.size()) > cfg.max_iterations)
        res.termination = false;
    }
  }

  // (b) PN-lexicon monotone across iterations (prefix runs are subsets)
  {
    std::mt19937 rng(1002);
    for (int i = 0; i < 100 && res.monotone; ++i) {
      auto docs = testgen::random_docs(rng, 100);
      corpus corp = build_corpus(docs, abbrevs);
      std::set<std::string> previous;
      for (int k = 1; k <= 6; ++k) {
        lexicon_set lexicons;
        lexicons.mc = seed_mc;
        pipeline_config capped = cfg;
        capped.max_iterations = k;
        run_pipeline(corp, lexicons, capped);
        auto now = pn_set(lexicons.pn);
        if (k > 1 &&
            !std::includes(now.begin(), now.end(), previous.begin(),
                           previous.end()))
          res.monotone = false;
        previous = std::move(now);
      }
    }
  }

  // (c) byte-identical artifacts across repeated runs
  {
    std::mt19937 rng(1003);
    for (int i = 0; i < 100 && res.deterministic; ++i) {
      auto docs = testgen::random_docs(rng, 120);
      corpus corp_a = build_corpus(docs, abbrevs);
      corpus corp_b = build_corpus(docs, abbrevs);
      lexicon_set la, lb;
      la.mc = seed_mc;
      lb.mc = seed_mc;
      if (serialize_run(corp_a, la, cfg) != serialize_run(corp_b, lb, cfg))
        res.deterministic = false;
    }
  }

  // (d) from-scratch oracle equality on corpora up to 200 tokens
  {
    std::mt19937 rng(1004);
    oracle::knobs knobs;
    knobs.min_evidence = cfg.min_evidence;
    knobs.max_iterations = cfg.max_iterations;
    for (int i = 0; i < 400 && res.oracle_equal; ++i) {
      corpus corp = build_corpus(testgen::random_docs(rng, 200), abbrevs);
      lexicon_set lexicons;
      lexicons.mc = seed_mc;
      run_pipeline(corp, lexicons, cfg);
      if (pn_set(lexicons.pn) !=
          oracle::final_pn(corp, oseeds, cfg.stoplist, knobs))
        res.oracle_equal = false;
    }
  }

  // (e) tokenize idempotence on 1000 random inputs
  {
    std::mt19937 rng(1005);
    for (int i = 0; i < 1000 && res.tokenize_idempotent; ++i) {
      std::string raw = testgen::random_raw_string(rng, 80);
      auto once = tokenize(raw, abbrevs);
      std::string joined;
      for (const auto& t : once) {
        if (!joined.empty()) joined.push_back(' ');
        joined += t.surface;
      }
      auto twice = tokenize(joined, abbrevs);
      if (once.size() != twice.size()) {
        res.tokenize_idempotent = false;
        break;
      }
      for (std::size_t k = 0; k < once.size(); ++k)
        if (once[k].surface != twice[k].surface)
          res.tokenize_idempotent = false;
    }
  }
  return res;
}

// ---- criterion 7: 50,000-word corpus under ten seconds ----

bool run_criterion_7(std::string& detail) {
  fs::path out = fresh_dir("c7");
  std::mt19937 rng(50000);
  std::string text;
  long words = 0;
  while (words < 50000) {
    std::string chunk = testgen::random_text(rng, 400);
    for (const char c : chunk)
      if (c == ' ') ++words;
    words += chunk.empty() ? 0 : 1;
    text += chunk;
    text.push_back('\n');
  }
  fs::path input = out / "synth.txt";
  {
    std::ofstream f(input);
    f << text;
  }
  cli::run_config cfg;
  cfg.mc_lexicon_path = kSource / "data/mc_lexicon.tsv";
  cfg.stoplist_path = kSource / "data/stoplist.tsv";
  cfg.output_dir = out / "run";

  auto start = std::chrono::steady_clock::now();
  int status = cli::run_tag(cfg, {input});
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::ostringstream d;
  d << words << " words tagged in " << elapsed << "s";
  detail = d.str();
  return status == 0 && elapsed < 10.0;
}

}  // namespace

int main() {
  std::string detail;

  try {
    bool ok = run_criterion_1(detail);
    criterion(1, ok, "bundled example fixture, " + detail);
  } catch (const std::exception& e) {
    criterion(1, false, std::string("exception: ") + e.what());
  }

  try {
    criterion(2, run_criterion_2(detail), detail);
  } catch (const std::exception& e) {
    criterion(2, false, std::string("exception: ") + e.what());
  }

  try {
    criterion(3, run_criterion_3(detail), detail);
  } catch (const std::exception& e) {
    criterion(3, false, std::string("exception: ") + e.what());
  }

  try {
    criterion(4, run_criterion_4(detail), detail);
  } catch (const std::exception& e) {
    criterion(4, false, std::string("exception: ") + e.what());
  }

  try {
    criterion(5, run_criterion_5(detail), detail);
  } catch (const std::exception& e) {
    criterion(5, false, std::string("exception: ") + e.what());
  }

  try {
    property_outcome p = run_properties();
    criterion(6, p.termination && p.monotone && p.deterministic &&
                     p.oracle_equal && p.tokenize_idempotent,
              std::string("properties: termination ") +
                  (p.termination ? "ok" : "FAIL") + ", monotone " +
                  (p.monotone ? "ok" : "FAIL") + ", deterministic " +
                  (p.deterministic ? "ok" : "FAIL") + ", oracle " +
                  (p.oracle_equal ? "ok" : "FAIL") + ", tokenizer " +
                  (p.tokenize_idempotent ? "ok" : "FAIL"));
  } catch (const std::exception& e) {
    criterion(6, false, std::string("exception: ") + e.what());
  }

  try {
    criterion(7, run_criterion_7(detail), detail);
  } catch (const std::exception& e) {
    criterion(7, false, std::string("exception: ") + e.what());
  }

  return g_failed == 0 ? 0 : 1;
}
