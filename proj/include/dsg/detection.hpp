#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dsg/collection.hpp"
#include "dsg/corpus.hpp"
#include "dsg/inference.hpp"
#include "dsg/lexicon.hpp"
#include "dsg/polarity.hpp"

namespace dsg {

/// One lexicon word ranked by how strongly inference disagrees with its
/// recorded polarity.
struct RankedWord {
  std::string form;
  Polarity lexicon_polarity = Polarity::Positive;
  double score = 0.0;  ///< belief mass on the opposite polarity
  BeliefVector belief{0.5, 0.5};
  std::size_t corpus_count = 0;
};

/// Score for a single word: b(-) when the lexicon says positive, b(+) when
/// it says negative.
double polarity_conflict_score(Polarity lexicon_polarity, const BeliefVector& belief);

/// Ranks lexicon-origin words by conflict score, descending; ties break by
/// corpus count (descending), then form. Only words present in both the
/// lexicon and the belief map appear.
std::vector<RankedWord> rank_conflicts(const std::map<std::string, BeliefVector, std::less<>>& beliefs,
                                       const std::map<std::string, CollectedWord, std::less<>>& collected,
                                       const SentimentLexicon& lexicon);

std::vector<RankedWord> detect_top_n(const std::vector<RankedWord>& ranked, std::size_t n);
std::vector<RankedWord> detect_threshold(const std::vector<RankedWord>& ranked, double min_score);

/// Correction: every ranked word flips to its belief-preferred polarity.
/// Words whose belief already agrees with the lexicon are skipped.
LexiconDelta delta_from_ranked(const std::vector<RankedWord>& ranked, const SentimentLexicon& lexicon);

/// Local classification instability baseline: rank each lexicon word by the
/// share of sentences containing it that the whole-sentence classifier calls
/// opposite to the word's recorded polarity. Words absent from the corpus
/// are excluded.
struct BaselineRankedWord {
  std::string form;
  Polarity lexicon_polarity = Polarity::Positive;
  double score = 0.0;
  std::size_t sentence_count = 0;
};

std::vector<BaselineRankedWord> rank_instability(const Corpus& corpus, const SentimentLexicon& lexicon);

/// Inferred polarity suggestions for non-lexicon nodes (argmax of belief).
struct NonlexicalWord {
  std::string form;
  WordOrigin origin = WordOrigin::Adjective;
  BeliefVector belief{0.5, 0.5};
  Polarity polarity = Polarity::Positive;
};

std::vector<NonlexicalWord> nonlexical_polarities(const std::map<std::string, BeliefVector, std::less<>>& beliefs,
                                                  const std::map<std::string, CollectedWord, std::less<>>& collected,
                                                  const SentimentLexicon& lexicon);

}  // namespace dsg
