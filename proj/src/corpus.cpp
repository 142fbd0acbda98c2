#include "dsg/corpus.hpp"

#include <cctype>
#include <sstream>

#include "dsg/errors.hpp"
#include "dsg/lexicon.hpp"
#include "dsg/tagger.hpp"
#include "dsg/text_util.hpp"

namespace dsg {

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

bool is_word_form(std::string_view form) {
  return !form.empty() && is_word_char(static_cast<unsigned char>(form.front()));
}

Token make_token(std::string_view surface) {
  Token token;
  token.surface = std::string(surface);
  token.form = to_lower(surface);
  return token;
}

// "don't" -> "do" + "n't"; keeps contracted negations visible to the
// negation merge.
void push_word(std::vector<Token>& out, std::string_view surface) {
  std::string lowered = to_lower(surface);
  if (lowered.size() > 3 && lowered.compare(lowered.size() - 3, 3, "n't") == 0) {
    out.push_back(make_token(surface.substr(0, surface.size() - 3)));
    out.push_back(make_token(surface.substr(surface.size() - 3)));
    return;
  }
  out.push_back(make_token(surface));
}

const PennTagMap& default_penn_map() {
  static const PennTagMap map = PennTagMap::defaults();
  return map;
}

const Tagger& tagger_of(const ParseOptions& options) {
  return options.tagger ? *options.tagger : Tagger::instance();
}

void mark_pretagged_negations(Sentence& sentence, const ParseOptions& options) {
  for (Token& token : sentence.tokens) {
    auto parts = split_negated_form(token.form);
    if (parts && options.negators.count(parts->first)) token.negated = true;
  }
}

}  // namespace

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::Adj: return "ADJ";
    case PosTag::Adv: return "ADV";
    case PosTag::Noun: return "NOUN";
    case PosTag::Verb: return "VERB";
    case PosTag::Conj: return "CONJ";
    case PosTag::Neg: return "NEG";
    case PosTag::Other: break;
  }
  return "OTHER";
}

std::optional<PosTag> parse_coarse_tag(std::string_view text) {
  std::string upper;
  upper.reserve(text.size());
  for (unsigned char c : text) {
    upper.push_back(c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A') : static_cast<char>(c));
  }
  if (upper == "ADJ") return PosTag::Adj;
  if (upper == "ADV") return PosTag::Adv;
  if (upper == "NOUN") return PosTag::Noun;
  if (upper == "VERB") return PosTag::Verb;
  if (upper == "OTHER") return PosTag::Other;
  if (upper == "CONJ") return PosTag::Conj;
  if (upper == "NEG") return PosTag::Neg;
  return std::nullopt;
}

std::optional<CorpusFormat> parse_corpus_format(std::string_view text) {
  std::string lowered = to_lower(trim(text));
  if (lowered == "raw") return CorpusFormat::Raw;
  if (lowered == "tagged") return CorpusFormat::Tagged;
  return std::nullopt;
}

const std::set<std::string, std::less<>>& default_negators() {
  static const std::set<std::string, std::less<>> negators = {
      "not", "no", "never", "hardly", "barely", "n't", "cannot", "without",
  };
  return negators;
}

CorpusStats Corpus::stats() const {
  CorpusStats stats;
  stats.sentence_count = sentences.size();
  for (const Sentence& sentence : sentences) stats.token_count += sentence.tokens.size();
  return stats;
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t start = i;
      while (i < n) {
        unsigned char w = static_cast<unsigned char>(line[i]);
        if (is_word_char(w)) {
          ++i;
        } else if (w == '\'' && i > start && i + 1 < n &&
                   is_word_char(static_cast<unsigned char>(line[i + 1]))) {
          ++i;  // word-internal apostrophe
        } else {
          break;
        }
      }
      push_word(tokens, line.substr(start, i - start));
      continue;
    }
    // Punctuation run becomes a single token.
    std::size_t start = i;
    while (i < n) {
      unsigned char p = static_cast<unsigned char>(line[i]);
      if (std::isspace(p) || is_word_char(p)) break;
      ++i;
    }
    tokens.push_back(make_token(line.substr(start, i - start)));
  }
  return tokens;
}

Sentence merge_negations(Sentence sentence, const std::set<std::string, std::less<>>& negators,
                         const SentimentLexicon* lexicon) {
  std::vector<Token> merged;
  merged.reserve(sentence.tokens.size());
  std::size_t i = 0;
  while (i < sentence.tokens.size()) {
    Token& token = sentence.tokens[i];
    if (negators.count(token.form) && i + 1 < sentence.tokens.size()) {
      const Token& next = sentence.tokens[i + 1];
      bool eligible = !negators.count(next.form) && is_word_form(next.form) &&
                      (next.tag == PosTag::Adj || next.tag == PosTag::Adv ||
                       (lexicon && lexicon->contains(next.form)));
      if (eligible) {
        Token combined;
        combined.surface = token.surface + " " + next.surface;
        combined.form = token.form + "_" + next.form;
        combined.tag = next.tag;
        combined.negated = true;
        merged.push_back(std::move(combined));
        i += 2;
        continue;
      }
    }
    merged.push_back(std::move(token));
    ++i;
  }
  sentence.tokens = std::move(merged);
  return sentence;
}

Corpus parse_raw(std::istream& in, const ParseOptions& options) {
  Corpus corpus;
  const Tagger& tagger = tagger_of(options);
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (trim(line).empty()) return;
    Sentence sentence;
    sentence.tokens = tokenize(line);
    sentence.source_id = std::to_string(lineno);
    tagger.tag_sentence(sentence);
    corpus.sentences.push_back(
        merge_negations(std::move(sentence), options.negators, options.lexicon));
  });
  return corpus;
}

Corpus parse_raw_text(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_raw(in, options);
}

Corpus parse_tagged(std::istream& in, const ParseOptions& options) {
  Corpus corpus;
  Sentence current;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.source_id = std::to_string(corpus.sentences.size() + 1);
    mark_pretagged_negations(current, options);
    corpus.sentences.push_back(
        merge_negations(std::move(current), options.negators, options.lexicon));
    current = Sentence{};
  };
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (trim(line).empty()) {
      flush();
      return;
    }
    auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw InputError("line " + std::to_string(lineno) + ": expected token<TAB>TAG");
    }
    Token token = make_token(fields[0]);
    if (auto coarse = parse_coarse_tag(fields[1])) {
      token.tag = *coarse;
    } else if (default_penn_map().contains(fields[1])) {
      token.tag = default_penn_map().map(fields[1]);
    } else {
      throw InputError("line " + std::to_string(lineno) + ": unknown POS tag: " +
                       std::string(fields[1]));
    }
    current.tokens.push_back(std::move(token));
  });
  flush();
  return corpus;
}

Corpus parse_tagged_text(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_tagged(in, options);
}

Corpus parse_corpus_file(const std::filesystem::path& path, CorpusFormat format,
                         const ParseOptions& options) {
  std::ifstream in = open_input(path);
  return format == CorpusFormat::Raw ? parse_raw(in, options) : parse_tagged(in, options);
}

void write_tagged(const Corpus& corpus, std::ostream& out) {
  bool first = true;
  for (const Sentence& sentence : corpus.sentences) {
    if (!first) out << '\n';
    first = false;
    for (const Token& token : sentence.tokens) {
      out << token.form << '\t' << to_string(token.tag) << '\n';
    }
  }
}

std::optional<std::pair<std::string, std::string>> split_negated_form(std::string_view form) {
  std::size_t underscore = form.find('_');
  if (underscore == std::string_view::npos || underscore == 0 || underscore + 1 == form.size()) {
    return std::nullopt;
  }
  return std::make_pair(std::string(form.substr(0, underscore)),
                        std::string(form.substr(underscore + 1)));
}

}  // namespace dsg
