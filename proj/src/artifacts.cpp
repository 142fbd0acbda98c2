#include "dsg/artifacts.hpp"

#include <json.hpp>

#include "dsg/errors.hpp"
#include "dsg/text_util.hpp"

namespace dsg {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail_line(std::string_view what, std::size_t lineno, const std::string& detail) {
  throw InputError(std::string(what) + " line " + std::to_string(lineno) + ": " + detail);
}

double parse_prob(std::string_view field, std::string_view what, std::size_t lineno) {
  try {
    return std::stod(std::string(field));
  } catch (const std::exception&) {
    fail_line(what, lineno, "malformed probability: " + std::string(field));
  }
}

std::size_t parse_count(std::string_view field, std::string_view what, std::size_t lineno) {
  try {
    return std::stoull(std::string(field));
  } catch (const std::exception&) {
    fail_line(what, lineno, "malformed count: " + std::string(field));
  }
}

Json eval_block(const EvalResult& result) {
  Json block;
  block["total"] = result.total;
  block["correct"] = result.correct;
  block["accuracy"] = result.accuracy();
  Json confusion;
  confusion["positive"] = Json{{"positive", result.confusion[0][0]},
                               {"negative", result.confusion[0][1]}};
  confusion["negative"] = Json{{"positive", result.confusion[1][0]},
                               {"negative", result.confusion[1][1]}};
  block["confusion"] = std::move(confusion);
  Json per_class;
  per_class["positive"] = Json{{"total", result.per_class[0].total},
                               {"correct", result.per_class[0].correct},
                               {"accuracy", result.per_class[0].accuracy()}};
  per_class["negative"] = Json{{"total", result.per_class[1].total},
                               {"correct", result.per_class[1].correct},
                               {"accuracy", result.per_class[1].accuracy()}};
  block["per_class"] = std::move(per_class);
  return block;
}

}  // namespace

void write_words(const std::map<std::string, CollectedWord, std::less<>>& collected,
                 std::ostream& out) {
  for (const auto& [form, word] : collected) {
    out << form << '\t' << to_string(word.origin) << '\t' << format_prob(word.prior_positive)
        << '\t' << word.corpus_count << '\n';
  }
}

std::map<std::string, CollectedWord, std::less<>> read_words(std::istream& in) {
  std::map<std::string, CollectedWord, std::less<>> collected;
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (trim(line).empty()) return;
    auto fields = split_tabs(line);
    if (fields.size() != 4) fail_line("words", lineno, "expected 4 tab-separated fields");
    CollectedWord word;
    word.form = std::string(fields[0]);
    auto origin = parse_word_origin(fields[1]);
    if (!origin) fail_line("words", lineno, "unknown origin: " + std::string(fields[1]));
    word.origin = *origin;
    word.prior_positive = parse_prob(fields[2], "words", lineno);
    word.corpus_count = parse_count(fields[3], "words", lineno);
    if (!collected.emplace(word.form, word).second) {
      fail_line("words", lineno, "duplicate form: " + word.form);
    }
  });
  return collected;
}

void write_triples(const std::map<PairKey, PairStats>& pairs, std::ostream& out) {
  for (const auto& [key, stats] : pairs) {
    const std::string& left = stats.flipped ? key.word2 : key.word1;
    const std::string& right = stats.flipped ? key.word1 : key.word2;
    out << left << '\t' << to_string(key.kind) << '\t' << right << '\t' << stats.count << '\n';
  }
}

std::map<PairKey, PairStats> read_triples(std::istream& in) {
  std::map<PairKey, PairStats> pairs;
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (trim(line).empty()) return;
    auto fields = split_tabs(line);
    if (fields.size() != 4) fail_line("triples", lineno, "expected 4 tab-separated fields");
    auto kind = parse_relation_kind(fields[1]);
    if (!kind) fail_line("triples", lineno, "unknown relation kind: " + std::string(fields[1]));
    std::string left(fields[0]);
    std::string right(fields[2]);
    if (left == right) fail_line("triples", lineno, "pair words must differ");
    PairKey key;
    PairStats stats;
    stats.flipped = left > right;
    key.word1 = stats.flipped ? right : left;
    key.word2 = stats.flipped ? left : right;
    key.kind = *kind;
    stats.count = parse_count(fields[3], "triples", lineno);
    auto [it, inserted] = pairs.emplace(std::move(key), stats);
    if (!inserted) it->second.count += stats.count;
  });
  return pairs;
}

void write_beliefs(const std::map<std::string, BeliefVector, std::less<>>& beliefs,
                   std::ostream& out) {
  for (const auto& [form, belief] : beliefs) {
    out << form << '\t' << format_prob(belief[0]) << '\t' << format_prob(belief[1]) << '\n';
  }
}

std::map<std::string, BeliefVector, std::less<>> read_beliefs(std::istream& in) {
  std::map<std::string, BeliefVector, std::less<>> beliefs;
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (trim(line).empty()) return;
    auto fields = split_tabs(line);
    if (fields.size() != 3) fail_line("beliefs", lineno, "expected 3 tab-separated fields");
    BeliefVector belief{parse_prob(fields[1], "beliefs", lineno),
                        parse_prob(fields[2], "beliefs", lineno)};
    if (!beliefs.emplace(std::string(fields[0]), belief).second) {
      fail_line("beliefs", lineno, "duplicate form: " + std::string(fields[0]));
    }
  });
  return beliefs;
}

void write_convergence(const ConvergenceReport& report, std::ostream& out) {
  Json root;
  root["converged"] = report.converged;
  root["iterations"] = report.iterations;
  root["final_delta"] = report.final_delta;
  out << root.dump(2) << '\n';
}

ConvergenceReport read_convergence(std::istream& in) {
  Json root = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded() || !root.is_object()) {
    throw InputError("convergence report is not a JSON object");
  }
  ConvergenceReport report;
  report.converged = root.value("converged", false);
  report.iterations = root.value("iterations", std::size_t{0});
  report.final_delta = root.value("final_delta", 0.0);
  return report;
}

void write_ranked(const std::vector<RankedWord>& ranked, std::ostream& out) {
  std::size_t rank = 0;
  for (const RankedWord& word : ranked) {
    out << ++rank << '\t' << word.form << '\t' << to_string(word.lexicon_polarity) << '\t'
        << format_prob(word.score) << '\t' << format_prob(word.belief[0]) << '\t'
        << format_prob(word.belief[1]) << '\n';
  }
}

void write_baseline_ranked(const std::vector<BaselineRankedWord>& ranked, std::ostream& out) {
  std::size_t rank = 0;
  for (const BaselineRankedWord& word : ranked) {
    out << ++rank << '\t' << word.form << '\t' << to_string(word.lexicon_polarity) << '\t'
        << format_prob(word.score) << '\n';
  }
}

void write_delta(const LexiconDelta& delta, const SentimentLexicon& base, std::ostream& out) {
  for (const auto& [word, polarity] : delta.changes) {
    auto old = base.polarity_of(word);
    out << word << '\t' << (old ? to_string(*old) : "unknown") << '\t' << to_string(polarity)
        << '\n';
  }
}

LexiconDelta read_delta(std::istream& in) {
  LexiconDelta delta;
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (trim(line).empty()) return;
    auto fields = split_tabs(line);
    if (fields.size() != 3) fail_line("delta", lineno, "expected 3 tab-separated fields");
    auto polarity = parse_polarity(fields[2]);
    if (!polarity) fail_line("delta", lineno, "unknown polarity: " + std::string(fields[2]));
    auto [it, inserted] = delta.changes.emplace(std::string(fields[0]), *polarity);
    if (!inserted) fail_line("delta", lineno, "duplicate word: " + std::string(fields[0]));
  });
  return delta;
}

void write_nonlexical(const std::vector<NonlexicalWord>& words, std::ostream& out) {
  for (const NonlexicalWord& word : words) {
    out << word.form << '\t' << to_string(word.origin) << '\t' << format_prob(word.belief[0])
        << '\t' << format_prob(word.belief[1]) << '\t' << to_string(word.polarity) << '\n';
  }
}

void write_classified(const std::vector<std::pair<std::string, SentenceScore>>& rows,
                      std::ostream& out) {
  for (const auto& [source_id, scored] : rows) {
    out << source_id << '\t' << format_score(scored.score) << '\t' << to_string(scored.label)
        << '\n';
  }
}

void write_eval(const EvalResult& result, const std::optional<EvalResult>& affected_only,
                bool delta_applied, std::ostream& out) {
  Json root = eval_block(result);
  root["affected_only"] = affected_only ? eval_block(*affected_only) : Json(nullptr);
  root["delta_applied"] = delta_applied;
  out << root.dump(2) << '\n';
}

}  // namespace dsg
