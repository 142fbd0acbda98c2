#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dsg/corpus.hpp"
#include "dsg/lexicon.hpp"
#include "dsg/polarity.hpp"

namespace dsg {

struct ClassifierConfig {
  std::size_t negation_window = 3;  ///< tokens scanned left for a negator
  std::map<std::string, double, std::less<>> intensifiers;
  std::set<std::string, std::less<>> negators;
  Polarity tie_label = Polarity::Positive;  ///< verdict when the score is 0

  ClassifierConfig();
};

struct SentenceScore {
  double score = 0.0;
  Polarity label = Polarity::Positive;
};

/// Sum over lexicon tokens of negation * intensity * polarity (+1/-1).
/// Negation-merged tokens use the merged form when the lexicon has it,
/// otherwise the reversed base polarity.
SentenceScore classify_sentence(const Sentence& sentence, const SentimentLexicon& lexicon,
                                const ClassifierConfig& config);

struct LabeledSentence {
  Sentence sentence;
  Polarity label = Polarity::Positive;
};

struct ClassCounts {
  std::size_t total = 0;
  std::size_t correct = 0;

  double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(correct) / total; }
};

struct EvalResult {
  std::size_t total = 0;
  std::size_t correct = 0;
  /// confusion[gold][predicted], 0 = positive.
  std::size_t confusion[2][2] = {{0, 0}, {0, 0}};
  ClassCounts per_class[2];

  double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(correct) / total; }
};

/// Throws InputError when `labeled` is empty.
EvalResult evaluate(const std::vector<LabeledSentence>& labeled, const SentimentLexicon& lexicon,
                    const ClassifierConfig& config);

/// True when the delta can change the sentence's score: the sentence uses a
/// remapped lexicon word directly, or negates one.
bool sentence_affected(const Sentence& sentence, const LexiconDelta& delta,
                       const SentimentLexicon& lexicon);

/// Evaluation restricted to affected sentences; nullopt when none are.
std::optional<EvalResult> evaluate_affected(const std::vector<LabeledSentence>& labeled,
                                            const SentimentLexicon& lexicon, const LexiconDelta& delta,
                                            const ClassifierConfig& config);

}  // namespace dsg
