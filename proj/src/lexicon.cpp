#include "dsg/lexicon.hpp"

#include <cctype>

#include "dsg/errors.hpp"
#include "dsg/text_util.hpp"

namespace dsg {

namespace {

// Lowercase and collapse internal whitespace runs to single underscores so
// multiword entries can match negation-merged token forms.
std::string normalize_entry(std::string_view raw) {
  std::string_view trimmed = trim(raw);
  std::string out;
  out.reserve(trimmed.size());
  bool in_space = false;
  for (unsigned char c : trimmed) {
    if (std::isspace(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back('_');
    in_space = false;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c));
  }
  return out;
}

std::vector<std::string> read_word_list(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<std::string> words;
  for_each_line(in, [&](std::string_view line, std::size_t) {
    std::string_view body = trim(line);
    if (body.empty() || body.front() == ';') return;
    words.emplace_back(body);
  });
  return words;
}

}  // namespace

void LexiconDelta::validate_against(const SentimentLexicon& base, bool require_changed) const {
  for (const auto& [word, polarity] : changes) {
    auto current = base.polarity_of(word);
    if (!current) throw InputError("delta word not in lexicon: " + word);
    if (require_changed && *current == polarity) {
      throw InputError("delta does not change polarity of: " + word);
    }
  }
}

SentimentLexicon SentimentLexicon::from_words(const std::vector<std::string>& positive,
                                              const std::vector<std::string>& negative) {
  SentimentLexicon lex;
  auto add = [&lex](const std::vector<std::string>& words, Polarity polarity) {
    for (const std::string& raw : words) {
      std::string form = normalize_entry(raw);
      if (form.empty()) continue;
      auto [it, inserted] = lex.entries_.emplace(std::move(form), polarity);
      if (!inserted && it->second != polarity) {
        throw InputError("word listed with both polarities: " + it->first);
      }
    }
  };
  add(positive, Polarity::Positive);
  add(negative, Polarity::Negative);
  for (const auto& [form, polarity] : lex.entries_) {
    (void)form;
    ++(polarity == Polarity::Positive ? lex.positive_ : lex.negative_);
  }
  return lex;
}

SentimentLexicon SentimentLexicon::from_files(const std::filesystem::path& positive,
                                              const std::filesystem::path& negative,
                                              std::vector<std::string>* warnings) {
  std::vector<std::string> pos = read_word_list(positive);
  std::vector<std::string> neg = read_word_list(negative);
  if (warnings) {
    if (pos.empty()) warnings->push_back("positive word list is empty: " + positive.string());
    if (neg.empty()) warnings->push_back("negative word list is empty: " + negative.string());
  }
  return from_words(pos, neg);
}

std::optional<Polarity> SentimentLexicon::polarity_of(std::string_view word) const {
  auto it = entries_.find(to_lower(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool SentimentLexicon::contains(std::string_view word) const {
  return entries_.count(to_lower(word)) != 0;
}

SentimentLexicon apply_delta(const SentimentLexicon& base, const LexiconDelta& delta) {
  delta.validate_against(base, /*require_changed=*/false);
  SentimentLexicon out = base;
  for (const auto& [word, polarity] : delta.changes) {
    out.entries_[word] = polarity;
  }
  out.positive_ = 0;
  out.negative_ = 0;
  for (const auto& [form, polarity] : out.entries_) {
    (void)form;
    ++(polarity == Polarity::Positive ? out.positive_ : out.negative_);
  }
  return out;
}

}  // namespace dsg
