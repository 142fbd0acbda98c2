#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dsg/artifacts.hpp"
#include "dsg/classifier.hpp"
#include "dsg/collection.hpp"
#include "dsg/config.hpp"
#include "dsg/correlation.hpp"
#include "dsg/detection.hpp"
#include "dsg/errors.hpp"
#include "dsg/graph.hpp"
#include "dsg/inference.hpp"
#include "dsg/lexicon.hpp"
#include "dsg/pipeline.hpp"
#include "dsg/text_util.hpp"

namespace {

using dsg::PipelineConfig;

struct ConfigOverrides {
  std::string config_path;
  std::optional<double> prior_positive, prior_nonlexical, prior_negative;
  std::optional<double> eps_and, eps_or, eps_nb, eps_alt, eps_but;
  std::optional<std::size_t> min_count, min_edge_count, conj_window;
  std::optional<std::size_t> max_iterations, negation_window, top_n;
  std::optional<double> tolerance, damping;
  bool count_weighted = false;
};

void add_config_options(CLI::App* cmd, ConfigOverrides& o) {
  cmd->add_option("--config", o.config_path, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--prior-positive", o.prior_positive, "prior P(+) for positive lexicon words");
  cmd->add_option("--prior-nonlexical", o.prior_nonlexical, "prior P(+) for non-lexicon words");
  cmd->add_option("--prior-negative", o.prior_negative, "prior P(+) for negative lexicon words");
  cmd->add_option("--epsilon-and", o.eps_and, "AND relation strength");
  cmd->add_option("--epsilon-or", o.eps_or, "OR relation strength");
  cmd->add_option("--epsilon-nb", o.eps_nb, "NB (adjacency) relation strength");
  cmd->add_option("--epsilon-alt", o.eps_alt, "ALT relation strength");
  cmd->add_option("--epsilon-but", o.eps_but, "BUT relation strength");
  cmd->add_option("--min-count", o.min_count, "drop non-lexicon words rarer than this");
  cmd->add_option("--min-edge-count", o.min_edge_count, "drop edges with less total evidence");
  cmd->add_option("--conj-window", o.conj_window, "and/or search window in tokens");
  cmd->add_option("--max-iterations", o.max_iterations, "propagation iteration cap");
  cmd->add_option("--tolerance", o.tolerance, "propagation convergence tolerance");
  cmd->add_option("--damping", o.damping, "message damping factor in [0,1)");
  cmd->add_option("--negation-window", o.negation_window, "classifier negation window");
  cmd->add_option("--top", o.top_n, "correction candidates taken from the ranking");
  cmd->add_flag("--count-weighted", o.count_weighted,
                "weight edge potentials by relation counts");
}

PipelineConfig make_config(const ConfigOverrides& o) {
  PipelineConfig cfg =
      o.config_path.empty() ? PipelineConfig{} : dsg::load_config_file(o.config_path);
  if (o.prior_positive) cfg.priors.positive = *o.prior_positive;
  if (o.prior_nonlexical) cfg.priors.nonlexical = *o.prior_nonlexical;
  if (o.prior_negative) cfg.priors.negative = *o.prior_negative;
  if (o.eps_and) cfg.epsilons.eps_and = *o.eps_and;
  if (o.eps_or) cfg.epsilons.eps_or = *o.eps_or;
  if (o.eps_nb) cfg.epsilons.eps_nb = *o.eps_nb;
  if (o.eps_alt) cfg.epsilons.eps_alt = *o.eps_alt;
  if (o.eps_but) cfg.epsilons.eps_but = *o.eps_but;
  if (o.min_count) cfg.min_count = *o.min_count;
  if (o.min_edge_count) cfg.min_edge_count = *o.min_edge_count;
  if (o.conj_window) cfg.conj_window = *o.conj_window;
  if (o.max_iterations) cfg.inference.max_iterations = *o.max_iterations;
  if (o.tolerance) cfg.inference.tolerance = *o.tolerance;
  if (o.damping) cfg.inference.damping = *o.damping;
  if (o.negation_window) cfg.classifier.negation_window = *o.negation_window;
  if (o.top_n) cfg.top_n = *o.top_n;
  if (o.count_weighted) cfg.count_weighted_edges = true;
  cfg.validate();
  return cfg;
}

struct LexiconPaths {
  std::string positive;
  std::string negative;
};

void add_lexicon_options(CLI::App* cmd, LexiconPaths& paths) {
  cmd->add_option("--positive", paths.positive, "positive word list")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--negative", paths.negative, "negative word list")
      ->required()
      ->check(CLI::ExistingFile);
}

dsg::SentimentLexicon load_lexicon(const LexiconPaths& paths) {
  std::vector<std::string> warnings;
  dsg::SentimentLexicon lexicon =
      dsg::SentimentLexicon::from_files(paths.positive, paths.negative, &warnings);
  for (const std::string& warning : warnings) std::cerr << "warning: " << warning << '\n';
  return lexicon;
}

dsg::CorpusFormat to_format(const std::string& name) {
  auto format = dsg::parse_corpus_format(name);
  if (!format) throw dsg::InputError("unknown corpus format: " + name);
  return *format;
}

// "-" selects stdout.
template <typename Writer>
void write_artifact(const std::string& path, Writer&& writer) {
  if (path == "-") {
    writer(std::cout);
  } else {
    std::ofstream out = dsg::open_output(path);
    writer(out);
  }
}

dsg::LexiconDelta load_delta(const std::string& path, const dsg::SentimentLexicon& lexicon) {
  std::ifstream in = dsg::open_input(path);
  dsg::LexiconDelta delta = dsg::read_delta(in);
  delta.validate_against(lexicon, /*require_changed=*/false);
  return delta;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domain sentiment graph: find lexicon words whose polarity flips in a corpus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dsg 0.1.0");

  // collect ------------------------------------------------------------
  auto* collect = app.add_subcommand("collect", "Collect sentiment words from a corpus");
  struct {
    std::string corpus, format = "raw", out = "-";
    LexiconPaths lexicon;
    ConfigOverrides overrides;
  } collect_opts;
  collect->add_option("--corpus", collect_opts.corpus, "corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  collect->add_option("--format", collect_opts.format, "corpus format: raw or tagged")
      ->check(CLI::IsMember({"raw", "tagged"}))
      ->capture_default_str();
  add_lexicon_options(collect, collect_opts.lexicon);
  collect->add_option("--out", collect_opts.out, "words.tsv output (- for stdout)")
      ->capture_default_str();
  add_config_options(collect, collect_opts.overrides);
  collect->callback([&] {
    PipelineConfig cfg = make_config(collect_opts.overrides);
    dsg::SentimentLexicon lexicon = load_lexicon(collect_opts.lexicon);
    dsg::Corpus corpus = dsg::parse_corpus_file(
        collect_opts.corpus, to_format(collect_opts.format), cfg.parse_options(&lexicon));
    auto collected = dsg::collect_words(corpus, lexicon, cfg.collection_config());
    write_artifact(collect_opts.out,
                   [&](std::ostream& out) { dsg::write_words(collected, out); });
  });

  // extract ------------------------------------------------------------
  auto* extract = app.add_subcommand("extract", "Extract conjunction triples from a corpus");
  struct {
    std::string corpus, format = "raw", words, out = "-";
    LexiconPaths lexicon;
    ConfigOverrides overrides;
  } extract_opts;
  extract->add_option("--corpus", extract_opts.corpus, "corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  extract->add_option("--format", extract_opts.format, "corpus format: raw or tagged")
      ->check(CLI::IsMember({"raw", "tagged"}))
      ->capture_default_str();
  extract->add_option("--words", extract_opts.words, "words.tsv from collect")
      ->required()
      ->check(CLI::ExistingFile);
  add_lexicon_options(extract, extract_opts.lexicon);
  extract->add_option("--out", extract_opts.out, "triples.tsv output (- for stdout)")
      ->capture_default_str();
  add_config_options(extract, extract_opts.overrides);
  extract->callback([&] {
    PipelineConfig cfg = make_config(extract_opts.overrides);
    dsg::SentimentLexicon lexicon = load_lexicon(extract_opts.lexicon);
    std::ifstream words_in = dsg::open_input(extract_opts.words);
    auto collected = dsg::read_words(words_in);
    dsg::Corpus corpus = dsg::parse_corpus_file(
        extract_opts.corpus, to_format(extract_opts.format), cfg.parse_options(&lexicon));
    auto pairs = dsg::aggregate(dsg::extract_triples(corpus, collected, cfg.extraction_config()));
    write_artifact(extract_opts.out, [&](std::ostream& out) { dsg::write_triples(pairs, out); });
  });

  // infer --------------------------------------------------------------
  auto* infer = app.add_subcommand("infer", "Run belief propagation over the word graph");
  struct {
    std::string nodes, edges, graph, out = "-", out_convergence;
    ConfigOverrides overrides;
  } infer_opts;
  infer->add_option("--nodes", infer_opts.nodes, "words.tsv from collect")
      ->check(CLI::ExistingFile);
  infer->add_option("--edges", infer_opts.edges, "triples.tsv from extract")
      ->check(CLI::ExistingFile);
  infer->add_option("--graph", infer_opts.graph, "combined graph dump")
      ->check(CLI::ExistingFile);
  infer->add_option("--out", infer_opts.out, "beliefs.tsv output (- for stdout)")
      ->capture_default_str();
  infer->add_option("--out-convergence", infer_opts.out_convergence,
                    "convergence.json output path");
  add_config_options(infer, infer_opts.overrides);
  infer->callback([&] {
    PipelineConfig cfg = make_config(infer_opts.overrides);
    bool have_graph = !infer_opts.graph.empty();
    bool have_parts = !infer_opts.nodes.empty() && !infer_opts.edges.empty();
    if (have_graph == have_parts) {
      throw dsg::InputError("pass either --graph or both --nodes and --edges");
    }
    dsg::MarkovField graph;
    if (have_graph) {
      graph = dsg::load_graph_file(infer_opts.graph);
    } else {
      std::ifstream nodes_in = dsg::open_input(infer_opts.nodes);
      std::ifstream edges_in = dsg::open_input(infer_opts.edges);
      graph = dsg::build_graph(dsg::read_words(nodes_in), dsg::read_triples(edges_in),
                               cfg.graph_config());
    }
    dsg::InferenceResult result = dsg::propagate(graph, cfg.inference, cfg.graph_config());
    if (!result.report.converged) {
      std::cerr << "warning: did not converge after " << result.report.iterations
                << " iterations (last delta " << result.report.final_delta << ")\n";
    }
    write_artifact(infer_opts.out,
                   [&](std::ostream& out) { dsg::write_beliefs(result.beliefs, out); });
    if (!infer_opts.out_convergence.empty()) {
      write_artifact(infer_opts.out_convergence,
                     [&](std::ostream& out) { dsg::write_convergence(result.report, out); });
    }
  });

  // detect ---------------------------------------------------------------
  auto* detect = app.add_subcommand("detect", "Rank lexicon words by polarity conflict");
  struct {
    std::string beliefs, words, corpus, format = "raw", baseline;
    std::string out = "-", out_delta, out_nonlexical;
    LexiconPaths lexicon;
    std::optional<double> threshold;
    ConfigOverrides overrides;
  } detect_opts;
  detect->add_option("--beliefs", detect_opts.beliefs, "beliefs.tsv from infer")
      ->check(CLI::ExistingFile);
  detect->add_option("--words", detect_opts.words, "words.tsv from collect")
      ->check(CLI::ExistingFile);
  add_lexicon_options(detect, detect_opts.lexicon);
  detect->add_option("--baseline", detect_opts.baseline, "baseline ranking instead (lci)")
      ->check(CLI::IsMember({"lci"}));
  detect->add_option("--corpus", detect_opts.corpus, "corpus file (baseline mode)")
      ->check(CLI::ExistingFile);
  detect->add_option("--format", detect_opts.format, "corpus format: raw or tagged")
      ->check(CLI::IsMember({"raw", "tagged"}))
      ->capture_default_str();
  detect->add_option("--threshold", detect_opts.threshold,
                     "take delta words with conflict score above this instead of --top");
  detect->add_option("--out", detect_opts.out, "ranking output (- for stdout)")
      ->capture_default_str();
  detect->add_option("--out-delta", detect_opts.out_delta, "lexicon delta output path");
  detect->add_option("--out-nonlexical", detect_opts.out_nonlexical,
                     "inferred polarities for non-lexicon words");
  add_config_options(detect, detect_opts.overrides);
  detect->callback([&] {
    PipelineConfig cfg = make_config(detect_opts.overrides);
    dsg::SentimentLexicon lexicon = load_lexicon(detect_opts.lexicon);
    if (!detect_opts.baseline.empty()) {
      if (detect_opts.corpus.empty()) {
        throw dsg::InputError("baseline ranking needs --corpus");
      }
      dsg::Corpus corpus = dsg::parse_corpus_file(
          detect_opts.corpus, to_format(detect_opts.format), cfg.parse_options(&lexicon));
      auto ranked = dsg::rank_instability(corpus, lexicon);
      write_artifact(detect_opts.out,
                     [&](std::ostream& out) { dsg::write_baseline_ranked(ranked, out); });
      return;
    }
    if (detect_opts.beliefs.empty() || detect_opts.words.empty()) {
      throw dsg::InputError("detect needs --beliefs and --words");
    }
    std::ifstream beliefs_in = dsg::open_input(detect_opts.beliefs);
    auto beliefs = dsg::read_beliefs(beliefs_in);
    std::ifstream words_in = dsg::open_input(detect_opts.words);
    auto collected = dsg::read_words(words_in);
    auto ranked = dsg::rank_conflicts(beliefs, collected, lexicon);
    write_artifact(detect_opts.out, [&](std::ostream& out) { dsg::write_ranked(ranked, out); });
    if (!detect_opts.out_delta.empty()) {
      auto selected = detect_opts.threshold
                          ? dsg::detect_threshold(ranked, *detect_opts.threshold)
                          : dsg::detect_top_n(ranked, cfg.top_n);
      dsg::LexiconDelta delta = dsg::delta_from_ranked(selected, lexicon);
      write_artifact(detect_opts.out_delta,
                     [&](std::ostream& out) { dsg::write_delta(delta, lexicon, out); });
    }
    if (!detect_opts.out_nonlexical.empty()) {
      auto nonlexical = dsg::nonlexical_polarities(beliefs, collected, lexicon);
      write_artifact(detect_opts.out_nonlexical,
                     [&](std::ostream& out) { dsg::write_nonlexical(nonlexical, out); });
    }
  });

  // classify -------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "Label each corpus sentence with the lexicon");
  struct {
    std::string corpus, format = "raw", delta, out = "-";
    LexiconPaths lexicon;
    ConfigOverrides overrides;
  } classify_opts;
  classify->add_option("--corpus", classify_opts.corpus, "corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  classify->add_option("--format", classify_opts.format, "corpus format: raw or tagged")
      ->check(CLI::IsMember({"raw", "tagged"}))
      ->capture_default_str();
  add_lexicon_options(classify, classify_opts.lexicon);
  classify->add_option("--delta", classify_opts.delta, "lexicon delta to apply first")
      ->check(CLI::ExistingFile);
  classify->add_option("--out", classify_opts.out, "classified.tsv output (- for stdout)")
      ->capture_default_str();
  add_config_options(classify, classify_opts.overrides);
  classify->callback([&] {
    PipelineConfig cfg = make_config(classify_opts.overrides);
    dsg::SentimentLexicon lexicon = load_lexicon(classify_opts.lexicon);
    dsg::Corpus corpus = dsg::parse_corpus_file(
        classify_opts.corpus, to_format(classify_opts.format), cfg.parse_options(&lexicon));
    dsg::SentimentLexicon effective = lexicon;
    if (!classify_opts.delta.empty()) {
      effective = dsg::apply_delta(lexicon, load_delta(classify_opts.delta, lexicon));
    }
    std::vector<std::pair<std::string, dsg::SentenceScore>> rows;
    rows.reserve(corpus.sentences.size());
    for (const dsg::Sentence& sentence : corpus.sentences) {
      rows.emplace_back(sentence.source_id,
                        dsg::classify_sentence(sentence, effective, cfg.classifier));
    }
    write_artifact(classify_opts.out,
                   [&](std::ostream& out) { dsg::write_classified(rows, out); });
  });

  // eval -----------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "Score the classifier against labeled sentences");
  struct {
    std::string labels, label_format = "csv", delta, out = "-";
    LexiconPaths lexicon;
    ConfigOverrides overrides;
  } eval_opts;
  eval->add_option("--labels", eval_opts.labels, "labeled sentences file")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--label-format", eval_opts.label_format, "labels format: csv or tagged")
      ->check(CLI::IsMember({"csv", "tagged"}))
      ->capture_default_str();
  add_lexicon_options(eval, eval_opts.lexicon);
  eval->add_option("--delta", eval_opts.delta, "lexicon delta to apply first")
      ->check(CLI::ExistingFile);
  eval->add_option("--out", eval_opts.out, "evaluation JSON output (- for stdout)")
      ->capture_default_str();
  add_config_options(eval, eval_opts.overrides);
  eval->callback([&] {
    PipelineConfig cfg = make_config(eval_opts.overrides);
    dsg::SentimentLexicon lexicon = load_lexicon(eval_opts.lexicon);
    auto labeled = dsg::load_labeled(eval_opts.labels, *dsg::parse_label_format(eval_opts.label_format),
                                     cfg.parse_options(&lexicon));
    std::optional<dsg::EvalResult> affected;
    bool delta_applied = !eval_opts.delta.empty();
    dsg::SentimentLexicon effective = lexicon;
    if (delta_applied) {
      dsg::LexiconDelta delta = load_delta(eval_opts.delta, lexicon);
      effective = dsg::apply_delta(lexicon, delta);
      affected = dsg::evaluate_affected(labeled, effective, delta, cfg.classifier);
    }
    dsg::EvalResult result = dsg::evaluate(labeled, effective, cfg.classifier);
    write_artifact(eval_opts.out, [&](std::ostream& out) {
      dsg::write_eval(result, affected, delta_applied, out);
    });
  });

  // run --------------------------------------------------------------------
  auto* run = app.add_subcommand("run", "Full pipeline: collect, extract, infer, detect, eval");
  struct {
    std::string corpus, format = "raw", labels, label_format = "csv", out_dir;
    LexiconPaths lexicon;
    ConfigOverrides overrides;
  } run_opts;
  run->add_option("--corpus", run_opts.corpus, "corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--format", run_opts.format, "corpus format: raw or tagged")
      ->check(CLI::IsMember({"raw", "tagged"}))
      ->capture_default_str();
  add_lexicon_options(run, run_opts.lexicon);
  run->add_option("--labels", run_opts.labels, "labeled sentences for before/after evaluation")
      ->check(CLI::ExistingFile);
  run->add_option("--label-format", run_opts.label_format, "labels format: csv or tagged")
      ->check(CLI::IsMember({"csv", "tagged"}))
      ->capture_default_str();
  run->add_option("--out-dir", run_opts.out_dir, "artifact output directory")->required();
  add_config_options(run, run_opts.overrides);
  run->callback([&] {
    PipelineConfig cfg = make_config(run_opts.overrides);
    dsg::PipelineInputs inputs;
    inputs.corpus_path = run_opts.corpus;
    inputs.corpus_format = to_format(run_opts.format);
    inputs.positive_words = run_opts.lexicon.positive;
    inputs.negative_words = run_opts.lexicon.negative;
    if (!run_opts.labels.empty()) {
      inputs.labeled_path = run_opts.labels;
      inputs.label_format = *dsg::parse_label_format(run_opts.label_format);
    }
    inputs.output_dir = run_opts.out_dir;
    dsg::PipelineOutcome outcome = dsg::run_pipeline(inputs, cfg);
    for (const std::string& warning : outcome.warnings) {
      std::cerr << "warning: " << warning << '\n';
    }
    std::cout << "propagation " << (outcome.convergence.converged ? "converged" : "stopped")
              << " after " << outcome.convergence.iterations << " iterations\n"
              << "flip candidates: " << outcome.detected << '\n'
              << "artifacts: " << run_opts.out_dir << '\n';
  });

  // config -------------------------------------------------------------
  auto* config_cmd = app.add_subcommand("config", "Print the effective configuration");
  struct {
    ConfigOverrides overrides;
    bool dump = false;
  } config_opts;
  config_cmd->add_flag("--dump", config_opts.dump, "print JSON config (default action)");
  add_config_options(config_cmd, config_opts.overrides);
  config_cmd->callback(
      [&] { std::cout << dsg::dump_config_json(make_config(config_opts.overrides)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const dsg::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const dsg::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
