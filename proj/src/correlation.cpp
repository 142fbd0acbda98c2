#include "dsg/correlation.hpp"

#include <algorithm>
#include <set>

#include "dsg/text_util.hpp"

namespace dsg {

namespace {

bool is_collected(const std::map<std::string, CollectedWord, std::less<>>& collected,
                  const Token& token) {
  return collected.count(token.form) != 0;
}

// Kind of the conjunction trigger at `form`, if any.
std::optional<RelationKind> trigger_kind(std::string_view form) {
  if (form == "and") return RelationKind::And;
  if (form == "or") return RelationKind::Or;
  if (form == "but" || form == "however") return RelationKind::But;
  if (form == "although" || form == "though") return RelationKind::Although;
  return std::nullopt;
}

Triple make_triple(const std::string& left, const std::string& right, RelationKind kind,
                   const std::string& source_id) {
  Triple triple;
  triple.kind = kind;
  triple.source_id = source_id;
  if (left <= right) {
    triple.word1 = left;
    triple.word2 = right;
    triple.flipped = false;
  } else {
    triple.word1 = right;
    triple.word2 = left;
    triple.flipped = true;
  }
  return triple;
}

// Nearest collected token index strictly before/after `pos`, limited to
// `window` steps when window > 0.
std::optional<std::size_t> nearest_collected(const Sentence& sentence,
                                             const std::map<std::string, CollectedWord, std::less<>>& collected,
                                             std::size_t pos, int direction, std::size_t window) {
  std::size_t steps = 0;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(pos) + direction;
  while (i >= 0 && i < static_cast<std::ptrdiff_t>(sentence.tokens.size())) {
    ++steps;
    if (window > 0 && steps > window) return std::nullopt;
    if (is_collected(collected, sentence.tokens[i])) return static_cast<std::size_t>(i);
    i += direction;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::And: return "AND";
    case RelationKind::Or: return "OR";
    case RelationKind::NextTo: return "NB";
    case RelationKind::Although: return "ALT";
    case RelationKind::But: break;
  }
  return "BUT";
}

std::optional<RelationKind> parse_relation_kind(std::string_view text) {
  if (text == "AND") return RelationKind::And;
  if (text == "OR") return RelationKind::Or;
  if (text == "NB") return RelationKind::NextTo;
  if (text == "ALT") return RelationKind::Although;
  if (text == "BUT") return RelationKind::But;
  return std::nullopt;
}

std::vector<Triple> extract_triples(const Sentence& sentence,
                                    const std::map<std::string, CollectedWord, std::less<>>& collected,
                                    const ExtractionConfig& config) {
  std::vector<Triple> triples;
  // Unordered form pairs already linked by a conjunction in this sentence;
  // NEXT_TO must not duplicate them.
  std::set<std::pair<std::string, std::string>> conj_pairs;

  for (std::size_t pos = 0; pos < sentence.tokens.size(); ++pos) {
    auto kind = trigger_kind(sentence.tokens[pos].form);
    if (!kind) continue;
    // and/or link nearby coordinated words; the contrastive kinds reach the
    // nearest sentiment word on each side regardless of distance.
    std::size_t window = (*kind == RelationKind::And || *kind == RelationKind::Or)
                             ? config.conj_window
                             : 0;
    auto left = nearest_collected(sentence, collected, pos, -1, window);
    auto right = nearest_collected(sentence, collected, pos, +1, window);
    if (!left || !right) continue;
    const std::string& lform = sentence.tokens[*left].form;
    const std::string& rform = sentence.tokens[*right].form;
    if (lform == rform) continue;
    triples.push_back(make_triple(lform, rform, *kind, sentence.source_id));
    conj_pairs.insert(lform <= rform ? std::make_pair(lform, rform)
                                     : std::make_pair(rform, lform));
  }

  // Adjacent collected words not already linked above.
  for (std::size_t pos = 0; pos + 1 < sentence.tokens.size(); ++pos) {
    const Token& a = sentence.tokens[pos];
    const Token& b = sentence.tokens[pos + 1];
    if (!is_collected(collected, a) || !is_collected(collected, b)) continue;
    if (a.form == b.form) continue;
    auto key = a.form <= b.form ? std::make_pair(a.form, b.form) : std::make_pair(b.form, a.form);
    if (conj_pairs.count(key)) continue;
    triples.push_back(make_triple(a.form, b.form, RelationKind::NextTo, sentence.source_id));
    conj_pairs.insert(key);
  }
  return triples;
}

std::vector<Triple> extract_triples(const Corpus& corpus,
                                    const std::map<std::string, CollectedWord, std::less<>>& collected,
                                    const ExtractionConfig& config) {
  std::vector<Triple> triples;
  for (const Sentence& sentence : corpus.sentences) {
    auto from_sentence = extract_triples(sentence, collected, config);
    triples.insert(triples.end(), std::make_move_iterator(from_sentence.begin()),
                   std::make_move_iterator(from_sentence.end()));
  }
  return triples;
}

std::map<PairKey, PairStats> aggregate(const std::vector<Triple>& triples) {
  std::map<PairKey, PairStats> pairs;
  for (const Triple& triple : triples) {
    PairKey key{triple.word1, triple.word2, triple.kind};
    auto [it, inserted] = pairs.emplace(std::move(key), PairStats{});
    if (inserted) it->second.flipped = triple.flipped;
    ++it->second.count;
  }
  return pairs;
}

}  // namespace dsg
