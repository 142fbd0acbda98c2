#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "dsg/classifier.hpp"
#include "dsg/collection.hpp"
#include "dsg/correlation.hpp"
#include "dsg/detection.hpp"
#include "dsg/inference.hpp"
#include "dsg/lexicon.hpp"

namespace dsg {

/// TSV / JSON serializers for every pipeline artifact. All writers are
/// deterministic: map iteration order plus fixed 9-decimal probability
/// formatting, so repeated runs produce byte-identical files.

void write_words(const std::map<std::string, CollectedWord, std::less<>>& collected, std::ostream& out);
std::map<std::string, CollectedWord, std::less<>> read_words(std::istream& in);

void write_triples(const std::map<PairKey, PairStats>& pairs, std::ostream& out);
std::map<PairKey, PairStats> read_triples(std::istream& in);

void write_beliefs(const std::map<std::string, BeliefVector, std::less<>>& beliefs, std::ostream& out);
std::map<std::string, BeliefVector, std::less<>> read_beliefs(std::istream& in);

void write_convergence(const ConvergenceReport& report, std::ostream& out);
ConvergenceReport read_convergence(std::istream& in);

void write_ranked(const std::vector<RankedWord>& ranked, std::ostream& out);
void write_baseline_ranked(const std::vector<BaselineRankedWord>& ranked, std::ostream& out);

void write_delta(const LexiconDelta& delta, const SentimentLexicon& base, std::ostream& out);
LexiconDelta read_delta(std::istream& in);

void write_nonlexical(const std::vector<NonlexicalWord>& words, std::ostream& out);

void write_classified(const std::vector<std::pair<std::string, SentenceScore>>& rows, std::ostream& out);

void write_eval(const EvalResult& result, const std::optional<EvalResult>& affected_only,
                bool delta_applied, std::ostream& out);

}  // namespace dsg
