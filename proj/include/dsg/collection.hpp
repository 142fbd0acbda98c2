#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dsg/corpus.hpp"
#include "dsg/lexicon.hpp"
#include "dsg/polarity.hpp"

namespace dsg {

/// How a word earned its node in the graph.
enum class WordOrigin { Lexical, Adjective, AdverbDerived, NegatedLexical, NegatedNonlexical };

std::string_view to_string(WordOrigin origin);
std::optional<WordOrigin> parse_word_origin(std::string_view text);

struct CollectedWord {
  std::string form;
  WordOrigin origin;
  double prior_positive = 0.5;  ///< node potential psi(+); psi(-) = 1 - psi(+)
  std::size_t corpus_count = 0;
};

struct PriorTable {
  double positive = 0.70;
  double nonlexical = 0.50;
  double negative = 0.30;

  /// Throws ConfigError unless all three lie strictly inside (0, 1).
  void validate() const;
};

struct CollectionConfig {
  PriorTable priors;
  std::size_t min_count = 1;  ///< drop words rarer than this
};

/// Collects sentiment-bearing words: lexicon entries, corpus adjectives,
/// adverbs reducible to a known adjective, and negation-merged forms whose
/// base qualifies. Returns a deterministic (sorted) map keyed by form.
std::map<std::string, CollectedWord, std::less<>> collect_words(const Corpus& corpus,
                                                                const SentimentLexicon& lexicon,
                                                                const CollectionConfig& config);

/// -ly stripping with the usual spelling repairs (happily -> happy,
/// terribly -> terrible, basically -> basic). Nullopt when the word does not
/// end in -ly or the result would be degenerate.
std::optional<std::string> adverb_to_adjective(std::string_view adverb);

/// Prior for a directly collected (non-negated) word.
double prior_for(const SentimentLexicon& lexicon, std::string_view form, const PriorTable& priors);

}  // namespace dsg
