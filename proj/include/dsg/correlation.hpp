#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsg/collection.hpp"
#include "dsg/corpus.hpp"

namespace dsg {

/// Conjunction relation types, ordered by decreasing association strength.
enum class RelationKind { And, Or, NextTo, Although, But };

std::string_view to_string(RelationKind kind);
std::optional<RelationKind> parse_relation_kind(std::string_view text);

/// One extracted co-occurrence. Words are stored in canonical (lexicographic)
/// order; `flipped` remembers that the surface order was (word2 .. word1) so
/// artifacts can print first-encounter orientation.
struct Triple {
  std::string word1;
  std::string word2;
  RelationKind kind;
  bool flipped = false;
  std::string source_id;
};

struct PairKey {
  std::string word1;
  std::string word2;
  RelationKind kind;

  friend bool operator<(const PairKey& a, const PairKey& b) {
    if (a.word1 != b.word1) return a.word1 < b.word1;
    if (a.word2 != b.word2) return a.word2 < b.word2;
    return a.kind < b.kind;
  }
};

struct PairStats {
  std::size_t count = 0;
  bool flipped = false;  ///< orientation of the first extraction
};

struct ExtractionConfig {
  std::size_t conj_window = 2;  ///< tokens scanned each side of and/or
};

/// Extracts conjunction triples from one sentence. `collected` decides which
/// forms participate. Each trigger word yields at most one triple; NEXT_TO
/// pairs adjacent collected words not already linked by a conjunction in the
/// same sentence.
std::vector<Triple> extract_triples(const Sentence& sentence,
                                    const std::map<std::string, CollectedWord, std::less<>>& collected,
                                    const ExtractionConfig& config);

std::vector<Triple> extract_triples(const Corpus& corpus,
                                    const std::map<std::string, CollectedWord, std::less<>>& collected,
                                    const ExtractionConfig& config);

/// Collapses triples into per-(pair, kind) counts. Deterministic ordering.
std::map<PairKey, PairStats> aggregate(const std::vector<Triple>& triples);

}  // namespace dsg
