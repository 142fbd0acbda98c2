#include "dsg/config.hpp"

#include <json.hpp>

#include "dsg/errors.hpp"
#include "dsg/text_util.hpp"

namespace dsg {

namespace {

using Json = nlohmann::ordered_json;

double as_number(const Json& value, const std::string& key) {
  if (!value.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return value.get<double>();
}

std::size_t as_count(const Json& value, const std::string& key) {
  if (!value.is_number_unsigned()) {
    throw ConfigError("config key '" + key + "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

bool as_bool(const Json& value, const std::string& key) {
  if (!value.is_boolean()) throw ConfigError("config key '" + key + "' must be a boolean");
  return value.get<bool>();
}

}  // namespace

CollectionConfig PipelineConfig::collection_config() const {
  CollectionConfig config;
  config.priors = priors;
  config.min_count = min_count;
  return config;
}

GraphConfig PipelineConfig::graph_config() const {
  GraphConfig config;
  config.epsilons = epsilons;
  config.min_edge_count = min_edge_count;
  config.count_weighted = count_weighted_edges;
  return config;
}

ExtractionConfig PipelineConfig::extraction_config() const {
  ExtractionConfig config;
  config.conj_window = conj_window;
  return config;
}

ParseOptions PipelineConfig::parse_options(const SentimentLexicon* lexicon) const {
  ParseOptions options;
  options.lexicon = lexicon;
  options.negators = negators;
  return options;
}

void PipelineConfig::validate() const {
  priors.validate();
  epsilons.validate();
  inference.validate();
  if (min_edge_count == 0) throw ConfigError("min_edge_count must be positive");
  if (min_count == 0) throw ConfigError("min_count must be positive");
  for (const auto& [word, weight] : classifier.intensifiers) {
    if (!(weight > 0.0)) throw ConfigError("intensifier weight for '" + word + "' must be positive");
  }
}

PipelineConfig parse_config_json(const std::string& text) {
  Json root = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) throw ConfigError("config is not valid JSON");
  if (!root.is_object()) throw ConfigError("config must be a JSON object");

  PipelineConfig config;
  for (const auto& [key, value] : root.items()) {
    if (key == "prior_positive") {
      config.priors.positive = as_number(value, key);
    } else if (key == "prior_nonlexical") {
      config.priors.nonlexical = as_number(value, key);
    } else if (key == "prior_negative") {
      config.priors.negative = as_number(value, key);
    } else if (key == "epsilon_and") {
      config.epsilons.eps_and = as_number(value, key);
    } else if (key == "epsilon_or") {
      config.epsilons.eps_or = as_number(value, key);
    } else if (key == "epsilon_nb") {
      config.epsilons.eps_nb = as_number(value, key);
    } else if (key == "epsilon_alt") {
      config.epsilons.eps_alt = as_number(value, key);
    } else if (key == "epsilon_but") {
      config.epsilons.eps_but = as_number(value, key);
    } else if (key == "count_weighted_edges") {
      config.count_weighted_edges = as_bool(value, key);
    } else if (key == "min_count") {
      config.min_count = as_count(value, key);
    } else if (key == "min_edge_count") {
      config.min_edge_count = as_count(value, key);
    } else if (key == "conj_window") {
      config.conj_window = as_count(value, key);
    } else if (key == "max_iterations") {
      config.inference.max_iterations = as_count(value, key);
    } else if (key == "tolerance") {
      config.inference.tolerance = as_number(value, key);
    } else if (key == "damping") {
      config.inference.damping = as_number(value, key);
    } else if (key == "negators") {
      if (!value.is_array()) throw ConfigError("config key 'negators' must be an array");
      config.negators.clear();
      for (const auto& item : value) {
        if (!item.is_string()) throw ConfigError("config key 'negators' must hold strings");
        config.negators.insert(to_lower(item.get<std::string>()));
      }
    } else if (key == "negation_window") {
      config.classifier.negation_window = as_count(value, key);
    } else if (key == "intensifiers") {
      if (!value.is_object()) throw ConfigError("config key 'intensifiers' must be an object");
      config.classifier.intensifiers.clear();
      for (const auto& [word, weight] : value.items()) {
        if (!weight.is_number()) throw ConfigError("intensifier weights must be numbers");
        config.classifier.intensifiers[to_lower(word)] = weight.get<double>();
      }
    } else if (key == "tie_label") {
      if (!value.is_string()) throw ConfigError("config key 'tie_label' must be a string");
      auto polarity = parse_polarity(value.get<std::string>());
      if (!polarity) throw ConfigError("config key 'tie_label' must name a polarity");
      config.classifier.tie_label = *polarity;
    } else if (key == "top_n") {
      config.top_n = as_count(value, key);
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
  config.classifier.negators = config.negators;
  config.validate();
  return config;
}

PipelineConfig load_config_file(const std::filesystem::path& path) {
  return parse_config_json(read_file(path));
}

std::string dump_config_json(const PipelineConfig& config) {
  Json root;
  root["prior_positive"] = config.priors.positive;
  root["prior_nonlexical"] = config.priors.nonlexical;
  root["prior_negative"] = config.priors.negative;
  root["epsilon_and"] = config.epsilons.eps_and;
  root["epsilon_or"] = config.epsilons.eps_or;
  root["epsilon_nb"] = config.epsilons.eps_nb;
  root["epsilon_alt"] = config.epsilons.eps_alt;
  root["epsilon_but"] = config.epsilons.eps_but;
  root["count_weighted_edges"] = config.count_weighted_edges;
  root["min_count"] = config.min_count;
  root["min_edge_count"] = config.min_edge_count;
  root["conj_window"] = config.conj_window;
  root["max_iterations"] = config.inference.max_iterations;
  root["tolerance"] = config.inference.tolerance;
  root["damping"] = config.inference.damping;
  root["negators"] = Json::array();
  for (const std::string& negator : config.negators) root["negators"].push_back(negator);
  root["negation_window"] = config.classifier.negation_window;
  root["intensifiers"] = Json::object();
  for (const auto& [word, weight] : config.classifier.intensifiers) {
    root["intensifiers"][word] = weight;
  }
  root["tie_label"] = std::string(to_string(config.classifier.tie_label));
  root["top_n"] = config.top_n;
  return root.dump(2) + "\n";
}

}  // namespace dsg
