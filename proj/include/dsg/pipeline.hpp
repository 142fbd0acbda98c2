#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dsg/classifier.hpp"
#include "dsg/config.hpp"
#include "dsg/corpus.hpp"
#include "dsg/lexicon.hpp"

namespace dsg {

enum class LabelFormat { Csv, Tagged };
std::optional<LabelFormat> parse_label_format(std::string_view text);

/// Labeled sentences: CSV `text,label` (raw text, last-comma split, optional
/// quoting) or the tagged corpus format with a `#label<TAB>...` line opening
/// each block.
std::vector<LabeledSentence> load_labeled(const std::filesystem::path& path, LabelFormat format,
                                          const ParseOptions& options);

struct PipelineInputs {
  std::filesystem::path corpus_path;
  CorpusFormat corpus_format = CorpusFormat::Raw;
  std::filesystem::path positive_words;
  std::filesystem::path negative_words;
  std::optional<std::filesystem::path> labeled_path;  ///< enables before/after evaluation
  LabelFormat label_format = LabelFormat::Csv;
  std::filesystem::path output_dir;
};

struct PipelineOutcome {
  ConvergenceReport convergence;
  std::size_t detected = 0;
  std::vector<std::string> warnings;
};

/// End-to-end run. Writes words.tsv, triples.tsv, beliefs.tsv,
/// convergence.json, ranked.tsv, delta.tsv and nonlexical.tsv into
/// output_dir, plus eval_before.json / eval_after.json when labels are
/// given. Each stage reuses the same write path as its standalone CLI
/// subcommand, so a monolithic run and a staged run produce byte-identical
/// artifacts.
PipelineOutcome run_pipeline(const PipelineInputs& inputs, const PipelineConfig& config);

}  // namespace dsg
