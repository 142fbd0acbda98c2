#include "dsg/collection.hpp"

#include "dsg/errors.hpp"
#include "dsg/tagger.hpp"

namespace dsg {

namespace {

bool valid_prior(double p) { return p > 0.0 && p < 1.0; }

}  // namespace

std::string_view to_string(WordOrigin origin) {
  switch (origin) {
    case WordOrigin::Lexical: return "lexical";
    case WordOrigin::Adjective: return "adjective";
    case WordOrigin::AdverbDerived: return "adverb_derived";
    case WordOrigin::NegatedLexical: return "negated_lexical";
    case WordOrigin::NegatedNonlexical: break;
  }
  return "negated_nonlexical";
}

std::optional<WordOrigin> parse_word_origin(std::string_view text) {
  if (text == "lexical") return WordOrigin::Lexical;
  if (text == "adjective") return WordOrigin::Adjective;
  if (text == "adverb_derived") return WordOrigin::AdverbDerived;
  if (text == "negated_lexical") return WordOrigin::NegatedLexical;
  if (text == "negated_nonlexical") return WordOrigin::NegatedNonlexical;
  return std::nullopt;
}

void PriorTable::validate() const {
  if (!valid_prior(positive) || !valid_prior(nonlexical) || !valid_prior(negative)) {
    throw ConfigError("priors must lie strictly between 0 and 1");
  }
}

std::optional<std::string> adverb_to_adjective(std::string_view adverb) {
  if (adverb.size() < 4 || adverb.substr(adverb.size() - 2) != "ly") return std::nullopt;
  auto ends_with = [&](std::string_view suffix) {
    return adverb.size() >= suffix.size() + 2 &&
           adverb.substr(adverb.size() - suffix.size()) == suffix;
  };
  if (ends_with("ically")) {
    // basically -> basic
    return std::string(adverb.substr(0, adverb.size() - 4));
  }
  if (ends_with("ily")) {
    // happily -> happy
    return std::string(adverb.substr(0, adverb.size() - 3)) + "y";
  }
  if (ends_with("bly")) {
    // terribly -> terrible
    return std::string(adverb.substr(0, adverb.size() - 1)) + "e";
  }
  return std::string(adverb.substr(0, adverb.size() - 2));
}

double prior_for(const SentimentLexicon& lexicon, std::string_view form, const PriorTable& priors) {
  auto polarity = lexicon.polarity_of(form);
  if (!polarity) return priors.nonlexical;
  return *polarity == Polarity::Positive ? priors.positive : priors.negative;
}

std::map<std::string, CollectedWord, std::less<>> collect_words(const Corpus& corpus,
                                                                const SentimentLexicon& lexicon,
                                                                const CollectionConfig& config) {
  config.priors.validate();

  // Pass 1: occurrence counts per form and the set of corpus adjectives.
  std::map<std::string, std::size_t, std::less<>> counts;
  std::set<std::string, std::less<>> corpus_adjectives;
  for (const Sentence& sentence : corpus.sentences) {
    for (const Token& token : sentence.tokens) {
      ++counts[token.form];
      if (token.tag == PosTag::Adj && !token.negated) corpus_adjectives.insert(token.form);
    }
  }

  auto known_adjective = [&](std::string_view form) {
    return lexicon.contains(form) || corpus_adjectives.count(form) != 0 ||
           Tagger::instance().seed_adjectives().count(form) != 0;
  };

  std::map<std::string, CollectedWord, std::less<>> collected;
  auto add = [&](const std::string& form, WordOrigin origin, double prior) {
    auto it = collected.find(form);
    if (it != collected.end()) {
      // Lexicon membership wins over any tag-based origin.
      if (origin == WordOrigin::Lexical) {
        it->second.origin = origin;
        it->second.prior_positive = prior;
      }
      return;
    }
    CollectedWord word;
    word.form = form;
    word.origin = origin;
    word.prior_positive = prior;
    word.corpus_count = counts[form];
    collected.emplace(form, std::move(word));
  };

  // Pass 2: decide membership.
  for (const Sentence& sentence : corpus.sentences) {
    for (const Token& token : sentence.tokens) {
      const std::string& form = token.form;
      if (token.negated) {
        auto parts = split_negated_form(form);
        if (!parts) continue;
        if (lexicon.contains(form)) {
          add(form, WordOrigin::Lexical, prior_for(lexicon, form, config.priors));
          continue;
        }
        const std::string& base = parts->second;
        auto base_polarity = lexicon.polarity_of(base);
        if (base_polarity) {
          double base_prior = *base_polarity == Polarity::Positive ? config.priors.positive
                                                                   : config.priors.negative;
          add(form, WordOrigin::NegatedLexical, 1.0 - base_prior);
        } else if (token.tag == PosTag::Adj || known_adjective(base)) {
          add(form, WordOrigin::NegatedNonlexical, 1.0 - config.priors.nonlexical);
        } else if (token.tag == PosTag::Adv) {
          auto adjective = adverb_to_adjective(base);
          if (adjective && known_adjective(*adjective)) {
            add(form, WordOrigin::NegatedNonlexical,
                1.0 - prior_for(lexicon, *adjective, config.priors));
          }
        }
        continue;
      }
      if (lexicon.contains(form)) {
        add(form, WordOrigin::Lexical, prior_for(lexicon, form, config.priors));
        continue;
      }
      if (token.tag == PosTag::Adj) {
        add(form, WordOrigin::Adjective, config.priors.nonlexical);
        continue;
      }
      if (token.tag == PosTag::Adv) {
        auto adjective = adverb_to_adjective(form);
        if (adjective && known_adjective(*adjective)) {
          add(form, WordOrigin::AdverbDerived, prior_for(lexicon, *adjective, config.priors));
        }
      }
    }
  }

  // min_count prunes rare words; lexicon words seen at all always stay.
  if (config.min_count > 1) {
    for (auto it = collected.begin(); it != collected.end();) {
      if (it->second.origin != WordOrigin::Lexical && it->second.corpus_count < config.min_count) {
        it = collected.erase(it);
      } else {
        ++it;
      }
    }
  }
  return collected;
}

}  // namespace dsg
