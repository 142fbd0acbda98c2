#include "dsg/classifier.hpp"

#include "dsg/errors.hpp"

namespace dsg {

namespace {

double polarity_value(Polarity p) { return p == Polarity::Positive ? 1.0 : -1.0; }

// Product of the unbroken run of intensifiers immediately left of `pos`.
double intensity_at(const Sentence& sentence, std::size_t pos, const ClassifierConfig& config) {
  double intensity = 1.0;
  std::size_t i = pos;
  while (i > 0) {
    auto it = config.intensifiers.find(sentence.tokens[i - 1].form);
    if (it == config.intensifiers.end()) break;
    intensity *= it->second;
    --i;
  }
  return intensity;
}

// -1 when a negator precedes `pos` within the window, stopping at any other
// lexicon word (it claims its own scope).
double negation_at(const Sentence& sentence, std::size_t pos, const SentimentLexicon& lexicon,
                   const ClassifierConfig& config) {
  std::size_t scanned = 0;
  std::size_t i = pos;
  while (i > 0 && scanned < config.negation_window) {
    const Token& token = sentence.tokens[i - 1];
    if (config.negators.count(token.form)) return -1.0;
    if (lexicon.contains(token.form)) break;
    --i;
    ++scanned;
  }
  return 1.0;
}

}  // namespace

ClassifierConfig::ClassifierConfig()
    : intensifiers{{"very", 1.5},     {"really", 1.5},   {"extremely", 2.0}, {"so", 1.3},
                   {"quite", 1.2},    {"slightly", 0.5}, {"somewhat", 0.7}},
      negators(default_negators()) {}

SentenceScore classify_sentence(const Sentence& sentence, const SentimentLexicon& lexicon,
                                const ClassifierConfig& config) {
  double score = 0.0;
  for (std::size_t pos = 0; pos < sentence.tokens.size(); ++pos) {
    const Token& token = sentence.tokens[pos];
    double negation = 1.0;
    std::optional<Polarity> polarity = lexicon.polarity_of(token.form);
    if (!polarity && token.negated) {
      // Merged token the lexicon does not cover: reverse the base polarity.
      auto parts = split_negated_form(token.form);
      if (parts) {
        auto base = lexicon.polarity_of(parts->second);
        if (base) polarity = opposite(*base);
      }
    }
    if (!polarity) continue;
    if (!token.negated) {
      negation = negation_at(sentence, pos, lexicon, config);
    }
    double intensity = intensity_at(sentence, pos, config);
    score += negation * intensity * polarity_value(*polarity);
  }
  SentenceScore result;
  result.score = score;
  result.label = score > 0.0   ? Polarity::Positive
                 : score < 0.0 ? Polarity::Negative
                               : config.tie_label;
  return result;
}

EvalResult evaluate(const std::vector<LabeledSentence>& labeled, const SentimentLexicon& lexicon,
                    const ClassifierConfig& config) {
  if (labeled.empty()) throw InputError("no labeled sentences to evaluate");
  EvalResult result;
  for (const LabeledSentence& example : labeled) {
    SentenceScore scored = classify_sentence(example.sentence, lexicon, config);
    int gold = example.label == Polarity::Positive ? 0 : 1;
    int predicted = scored.label == Polarity::Positive ? 0 : 1;
    ++result.total;
    ++result.confusion[gold][predicted];
    ++result.per_class[gold].total;
    if (gold == predicted) {
      ++result.correct;
      ++result.per_class[gold].correct;
    }
  }
  return result;
}

bool sentence_affected(const Sentence& sentence, const LexiconDelta& delta,
                       const SentimentLexicon& lexicon) {
  for (const Token& token : sentence.tokens) {
    if (delta.changes.count(token.form)) return true;
    if (token.negated && !lexicon.contains(token.form)) {
      auto parts = split_negated_form(token.form);
      if (parts && delta.changes.count(parts->second)) return true;
    }
  }
  return false;
}

std::optional<EvalResult> evaluate_affected(const std::vector<LabeledSentence>& labeled,
                                            const SentimentLexicon& lexicon,
                                            const LexiconDelta& delta,
                                            const ClassifierConfig& config) {
  std::vector<LabeledSentence> affected;
  for (const LabeledSentence& example : labeled) {
    if (sentence_affected(example.sentence, delta, lexicon)) affected.push_back(example);
  }
  if (affected.empty()) return std::nullopt;
  return evaluate(affected, lexicon, config);
}

}  // namespace dsg
