#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dsg {

class SentimentLexicon;
class Tagger;

/// Coarse POS tagset. NEG marks negator words found by the heuristic tagger;
/// pre-tagged input keeps whatever tag it supplies.
enum class PosTag { Adj, Adv, Noun, Verb, Other, Conj, Neg };

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_coarse_tag(std::string_view text);

struct Token {
  std::string surface;  ///< original text
  std::string form;     ///< lowercase matching form; negator_base when merged
  PosTag tag = PosTag::Other;
  bool negated = false;  ///< produced by a negation merge
};

struct Sentence {
  std::vector<Token> tokens;
  std::string source_id;  ///< provenance (input line / sentence number)
};

struct CorpusStats {
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;
};

class Corpus {
 public:
  std::vector<Sentence> sentences;

  CorpusStats stats() const;
};

enum class CorpusFormat { Raw, Tagged };
std::optional<CorpusFormat> parse_corpus_format(std::string_view text);

const std::set<std::string, std::less<>>& default_negators();

struct ParseOptions {
  /// Heuristic tagger for raw mode; the shared default instance when null.
  const Tagger* tagger = nullptr;
  /// Lexicon membership makes a token a valid negation-merge target; may be
  /// null when no lexicon is in play.
  const SentimentLexicon* lexicon = nullptr;
  std::set<std::string, std::less<>> negators = default_negators();
};

/// Splits one line on whitespace and punctuation boundaries. Punctuation runs
/// become their own tokens (tag OTHER); word-internal apostrophes are kept
/// and a trailing "n't" is split off as its own token.
std::vector<Token> tokenize(std::string_view line);

/// Raw mode: UTF-8, one sentence per line, blank lines skipped. Tokens are
/// tagged with the heuristic tagger, then negations merged.
Corpus parse_raw(std::istream& in, const ParseOptions& options);
Corpus parse_raw_text(std::string_view text, const ParseOptions& options);

/// Tagged mode: `token<TAB>TAG` lines, blank line between sentences. TAG is a
/// coarse tag or a Penn-style tag (mapped via the table in tagger.hpp).
/// Malformed lines raise InputError with their line number. Negation merging
/// is still applied.
Corpus parse_tagged(std::istream& in, const ParseOptions& options);
Corpus parse_tagged_text(std::string_view text, const ParseOptions& options);

Corpus parse_corpus_file(const std::filesystem::path& path, CorpusFormat format,
                         const ParseOptions& options);

/// Serializes in the tagged format (forms, coarse tags). parse_tagged of the
/// output reproduces every token's form, tag and negation flag; original
/// surface casing is not kept.
void write_tagged(const Corpus& corpus, std::ostream& out);

/// Merges each negator immediately followed by an ADJ/ADV/lexicon token into
/// a single `negator_base` token with reversed-polarity semantics. Single
/// left-to-right pass, non-overlapping; tokens that are themselves negators
/// never act as merge targets.
Sentence merge_negations(Sentence sentence,
                         const std::set<std::string, std::less<>>& negators,
                         const SentimentLexicon* lexicon);

/// Splits a negation-merged form at its first underscore; nullopt when the
/// form has no underscore.
std::optional<std::pair<std::string, std::string>> split_negated_form(std::string_view form);

}  // namespace dsg
