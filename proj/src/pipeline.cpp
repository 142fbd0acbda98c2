#include "dsg/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "dsg/artifacts.hpp"
#include "dsg/collection.hpp"
#include "dsg/correlation.hpp"
#include "dsg/detection.hpp"
#include "dsg/errors.hpp"
#include "dsg/graph.hpp"
#include "dsg/inference.hpp"
#include "dsg/text_util.hpp"

namespace dsg {

namespace {

std::string unquote_csv(std::string_view field) {
  std::string_view body = trim(field);
  if (body.size() >= 2 && body.front() == '"' && body.back() == '"') {
    body.remove_prefix(1);
    body.remove_suffix(1);
    std::string out;
    out.reserve(body.size());
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '"' && i + 1 < body.size() && body[i + 1] == '"') ++i;
      out.push_back(body[i]);
    }
    return out;
  }
  return std::string(body);
}

std::vector<LabeledSentence> load_labeled_csv(const std::filesystem::path& path,
                                              const ParseOptions& options) {
  std::ifstream in = open_input(path);
  std::vector<LabeledSentence> labeled;
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (trim(line).empty()) return;
    std::size_t comma = line.rfind(',');
    if (comma == std::string_view::npos) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": expected text,label");
    }
    std::string_view label_field = trim(line.substr(comma + 1));
    auto label = parse_polarity(label_field);
    if (!label) {
      if (lineno == 1 && to_lower(label_field) == "label") return;  // header row
      throw InputError(path.string() + ":" + std::to_string(lineno) +
                       ": unknown label: " + std::string(label_field));
    }
    std::string text = unquote_csv(line.substr(0, comma));
    Corpus parsed = parse_raw_text(text, options);
    if (parsed.sentences.empty()) return;
    for (Sentence& sentence : parsed.sentences) {
      sentence.source_id = std::to_string(lineno);
      labeled.push_back(LabeledSentence{std::move(sentence), *label});
    }
  });
  return labeled;
}

std::vector<LabeledSentence> load_labeled_tagged(const std::filesystem::path& path,
                                                 const ParseOptions& options) {
  std::ifstream in = open_input(path);
  std::vector<LabeledSentence> labeled;
  std::optional<Polarity> block_label;
  std::string block_text;
  std::size_t block_start = 0;

  auto flush = [&] {
    if (!block_label && block_text.empty()) return;
    if (!block_label) {
      throw InputError(path.string() + ":" + std::to_string(block_start) +
                       ": sentence block without #label header");
    }
    Corpus parsed = parse_tagged_text(block_text, options);
    for (Sentence& sentence : parsed.sentences) {
      sentence.source_id = std::to_string(labeled.size() + 1);
      labeled.push_back(LabeledSentence{std::move(sentence), *block_label});
    }
    block_label.reset();
    block_text.clear();
  };

  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (trim(line).empty()) {
      flush();
      return;
    }
    auto fields = split_tabs(line);
    if (fields[0] == "#label") {
      if (block_label || !block_text.empty()) {
        throw InputError(path.string() + ":" + std::to_string(lineno) +
                         ": #label must open its own block");
      }
      if (fields.size() != 2) {
        throw InputError(path.string() + ":" + std::to_string(lineno) +
                         ": expected #label<TAB>polarity");
      }
      auto label = parse_polarity(fields[1]);
      if (!label) {
        throw InputError(path.string() + ":" + std::to_string(lineno) +
                         ": unknown label: " + std::string(fields[1]));
      }
      block_label = *label;
      block_start = lineno;
      return;
    }
    if (!block_label) {
      throw InputError(path.string() + ":" + std::to_string(lineno) +
                       ": sentence block without #label header");
    }
    block_text.append(line);
    block_text.push_back('\n');
  });
  flush();
  return labeled;
}

}  // namespace

std::optional<LabelFormat> parse_label_format(std::string_view text) {
  std::string lowered = to_lower(trim(text));
  if (lowered == "csv") return LabelFormat::Csv;
  if (lowered == "tagged") return LabelFormat::Tagged;
  return std::nullopt;
}

std::vector<LabeledSentence> load_labeled(const std::filesystem::path& path, LabelFormat format,
                                          const ParseOptions& options) {
  return format == LabelFormat::Csv ? load_labeled_csv(path, options)
                                    : load_labeled_tagged(path, options);
}

PipelineOutcome run_pipeline(const PipelineInputs& inputs, const PipelineConfig& config) {
  config.validate();
  PipelineOutcome outcome;

  SentimentLexicon lexicon =
      SentimentLexicon::from_files(inputs.positive_words, inputs.negative_words, &outcome.warnings);
  ParseOptions parse_options = config.parse_options(&lexicon);
  Corpus corpus = parse_corpus_file(inputs.corpus_path, inputs.corpus_format, parse_options);
  if (corpus.sentences.empty()) {
    outcome.warnings.push_back("corpus has no sentences: " + inputs.corpus_path.string());
  }

  std::filesystem::create_directories(inputs.output_dir);
  auto write_to = [&](const char* name, const auto& writer) {
    std::ofstream out = open_output(inputs.output_dir / name);
    writer(out);
  };

  auto collected = collect_words(corpus, lexicon, config.collection_config());
  write_to("words.tsv", [&](std::ostream& out) { write_words(collected, out); });

  auto pairs = aggregate(extract_triples(corpus, collected, config.extraction_config()));
  write_to("triples.tsv", [&](std::ostream& out) { write_triples(pairs, out); });

  MarkovField graph = build_graph(collected, pairs, config.graph_config());
  InferenceResult inference = propagate(graph, config.inference, config.graph_config());
  outcome.convergence = inference.report;
  if (!inference.report.converged) {
    std::ostringstream message;
    message << "inference did not converge after " << inference.report.iterations
            << " iterations (last delta " << inference.report.final_delta << ")";
    outcome.warnings.push_back(message.str());
  }
  write_to("beliefs.tsv", [&](std::ostream& out) { write_beliefs(inference.beliefs, out); });
  write_to("convergence.json",
           [&](std::ostream& out) { write_convergence(inference.report, out); });

  auto ranked = rank_conflicts(inference.beliefs, collected, lexicon);
  write_to("ranked.tsv", [&](std::ostream& out) { write_ranked(ranked, out); });

  LexiconDelta delta = delta_from_ranked(detect_top_n(ranked, config.top_n), lexicon);
  outcome.detected = delta.size();
  write_to("delta.tsv", [&](std::ostream& out) { write_delta(delta, lexicon, out); });

  auto nonlexical = nonlexical_polarities(inference.beliefs, collected, lexicon);
  write_to("nonlexical.tsv", [&](std::ostream& out) { write_nonlexical(nonlexical, out); });

  if (inputs.labeled_path) {
    auto labeled = load_labeled(*inputs.labeled_path, inputs.label_format, parse_options);
    EvalResult before = evaluate(labeled, lexicon, config.classifier);
    auto before_affected = evaluate_affected(labeled, lexicon, delta, config.classifier);
    write_to("eval_before.json", [&](std::ostream& out) {
      write_eval(before, before_affected, /*delta_applied=*/false, out);
    });

    SentimentLexicon corrected = apply_delta(lexicon, delta);
    EvalResult after = evaluate(labeled, corrected, config.classifier);
    auto after_affected = evaluate_affected(labeled, corrected, delta, config.classifier);
    write_to("eval_after.json", [&](std::ostream& out) {
      write_eval(after, after_affected, /*delta_applied=*/true, out);
    });
  }
  return outcome;
}

}  // namespace dsg
