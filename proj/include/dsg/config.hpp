#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "dsg/classifier.hpp"
#include "dsg/collection.hpp"
#include "dsg/correlation.hpp"
#include "dsg/graph.hpp"
#include "dsg/inference.hpp"

namespace dsg {

/// Every tunable in one flat struct. JSON files may set any subset of keys;
/// unknown keys are a ConfigError so typos fail loudly.
struct PipelineConfig {
  PriorTable priors;
  EpsilonTable epsilons;
  std::size_t min_count = 1;
  std::size_t min_edge_count = 1;
  std::size_t conj_window = 2;
  bool count_weighted_edges = false;
  InferenceParams inference;
  std::set<std::string, std::less<>> negators = default_negators();
  ClassifierConfig classifier;
  std::size_t top_n = 10;

  CollectionConfig collection_config() const;
  GraphConfig graph_config() const;
  ExtractionConfig extraction_config() const;
  ParseOptions parse_options(const SentimentLexicon* lexicon) const;

  void validate() const;
};

PipelineConfig load_config_file(const std::filesystem::path& path);
PipelineConfig parse_config_json(const std::string& text);

/// Round-trips through parse_config_json; used by `dsg config --dump`.
std::string dump_config_json(const PipelineConfig& config);

}  // namespace dsg
