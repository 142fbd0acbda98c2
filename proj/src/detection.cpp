#include "dsg/detection.hpp"

#include <algorithm>
#include <set>

#include "dsg/classifier.hpp"

namespace dsg {

double polarity_conflict_score(Polarity lexicon_polarity, const BeliefVector& belief) {
  return lexicon_polarity == Polarity::Positive ? belief[1] : belief[0];
}

std::vector<RankedWord> rank_conflicts(const std::map<std::string, BeliefVector, std::less<>>& beliefs,
                                       const std::map<std::string, CollectedWord, std::less<>>& collected,
                                       const SentimentLexicon& lexicon) {
  std::vector<RankedWord> ranked;
  for (const auto& [form, belief] : beliefs) {
    auto word = collected.find(form);
    if (word == collected.end() || word->second.origin != WordOrigin::Lexical) continue;
    auto polarity = lexicon.polarity_of(form);
    if (!polarity) continue;
    RankedWord entry;
    entry.form = form;
    entry.lexicon_polarity = *polarity;
    entry.belief = belief;
    entry.score = polarity_conflict_score(*polarity, belief);
    entry.corpus_count = word->second.corpus_count;
    ranked.push_back(std::move(entry));
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedWord& a, const RankedWord& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.corpus_count != b.corpus_count) return a.corpus_count > b.corpus_count;
    return a.form < b.form;
  });
  return ranked;
}

std::vector<RankedWord> detect_top_n(const std::vector<RankedWord>& ranked, std::size_t n) {
  return {ranked.begin(), ranked.begin() + std::min(n, ranked.size())};
}

std::vector<RankedWord> detect_threshold(const std::vector<RankedWord>& ranked, double min_score) {
  std::vector<RankedWord> out;
  for (const RankedWord& word : ranked) {
    if (word.score > min_score) out.push_back(word);
  }
  return out;
}

LexiconDelta delta_from_ranked(const std::vector<RankedWord>& ranked,
                               const SentimentLexicon& lexicon) {
  LexiconDelta delta;
  for (const RankedWord& word : ranked) {
    Polarity preferred = word.belief[0] >= word.belief[1] ? Polarity::Positive : Polarity::Negative;
    if (preferred != word.lexicon_polarity) delta.changes[word.form] = preferred;
  }
  delta.validate_against(lexicon);
  return delta;
}

std::vector<BaselineRankedWord> rank_instability(const Corpus& corpus,
                                                 const SentimentLexicon& lexicon) {
  // Count, per lexicon word, the sentences containing it and how many of
  // those the whole-sentence classifier labels against the word's polarity.
  ClassifierConfig classifier_config;
  struct Tally {
    std::size_t containing = 0;
    std::size_t opposing = 0;
  };
  std::map<std::string, Tally, std::less<>> tallies;
  for (const Sentence& sentence : corpus.sentences) {
    SentenceScore score = classify_sentence(sentence, lexicon, classifier_config);
    std::set<std::string, std::less<>> seen;
    for (const Token& token : sentence.tokens) {
      if (lexicon.contains(token.form)) seen.insert(token.form);
    }
    for (const std::string& form : seen) {
      Tally& tally = tallies[form];
      ++tally.containing;
      if (score.label != *lexicon.polarity_of(form)) ++tally.opposing;
    }
  }

  std::vector<BaselineRankedWord> ranked;
  for (const auto& [form, tally] : tallies) {
    if (tally.containing == 0) continue;
    BaselineRankedWord entry;
    entry.form = form;
    entry.lexicon_polarity = *lexicon.polarity_of(form);
    entry.score = static_cast<double>(tally.opposing) / static_cast<double>(tally.containing);
    entry.sentence_count = tally.containing;
    ranked.push_back(std::move(entry));
  }
  std::sort(ranked.begin(), ranked.end(), [](const BaselineRankedWord& a, const BaselineRankedWord& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.sentence_count != b.sentence_count) return a.sentence_count > b.sentence_count;
    return a.form < b.form;
  });
  return ranked;
}

std::vector<NonlexicalWord> nonlexical_polarities(const std::map<std::string, BeliefVector, std::less<>>& beliefs,
                                                  const std::map<std::string, CollectedWord, std::less<>>& collected,
                                                  const SentimentLexicon& lexicon) {
  std::vector<NonlexicalWord> words;
  for (const auto& [form, belief] : beliefs) {
    auto word = collected.find(form);
    if (word == collected.end() || word->second.origin == WordOrigin::Lexical) continue;
    if (lexicon.contains(form)) continue;
    NonlexicalWord entry;
    entry.form = form;
    entry.origin = word->second.origin;
    entry.belief = belief;
    entry.polarity = belief[0] >= belief[1] ? Polarity::Positive : Polarity::Negative;
    words.push_back(std::move(entry));
  }
  return words;
}

}  // namespace dsg
