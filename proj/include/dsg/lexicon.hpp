#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsg/polarity.hpp"

namespace dsg {

class SentimentLexicon;

/// A set of polarity corrections to overlay on a base lexicon. Every key must
/// exist in the base; detection output additionally guarantees the mapped
/// polarity differs from the base one.
struct LexiconDelta {
  std::map<std::string, Polarity, std::less<>> changes;

  bool empty() const { return changes.empty(); }
  std::size_t size() const { return changes.size(); }

  /// Throws InputError on a key absent from base, and (when require_changed)
  /// on an entry equal to the base polarity.
  void validate_against(const SentimentLexicon& base, bool require_changed = true) const;
};

/// General-purpose sentiment lexicon: word form -> default polarity.
/// Immutable after construction; modification returns a new value.
class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  /// Builds from two word lists. Words are lowercased and deduplicated within
  /// a list; a word present in both lists raises InputError. Multiword
  /// entries are kept with internal whitespace collapsed to underscores so
  /// they can match negation-merged tokens.
  static SentimentLexicon from_words(const std::vector<std::string>& positive,
                                     const std::vector<std::string>& negative);

  /// Loads the two-file format: one entry per line, UTF-8, lines starting
  /// with ';' and blank lines skipped. An empty side is accepted with a
  /// warning appended to *warnings.
  static SentimentLexicon from_files(const std::filesystem::path& positive,
                                     const std::filesystem::path& negative,
                                     std::vector<std::string>* warnings = nullptr);

  std::optional<Polarity> polarity_of(std::string_view word) const;
  bool contains(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t positive_count() const { return positive_; }
  std::size_t negative_count() const { return negative_; }

  const std::map<std::string, Polarity, std::less<>>& entries() const { return entries_; }

 private:
  friend SentimentLexicon apply_delta(const SentimentLexicon&, const LexiconDelta&);

  std::map<std::string, Polarity, std::less<>> entries_;
  std::size_t positive_ = 0;
  std::size_t negative_ = 0;
};

/// Returns base with the delta's polarities set. Keys absent from base are
/// rejected; re-applying the same delta is a no-op.
SentimentLexicon apply_delta(const SentimentLexicon& base, const LexiconDelta& delta);

}  // namespace dsg
