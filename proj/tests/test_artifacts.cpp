#include <doctest.h>

#include <sstream>

#include "dsg/artifacts.hpp"
#include "dsg/errors.hpp"

using namespace dsg;

TEST_CASE("words artifact round-trips") {
  std::map<std::string, CollectedWord, std::less<>> collected;
  collected["crush"] = {"crush", WordOrigin::Lexical, 0.3, 7};
  collected["not_bad"] = {"not_bad", WordOrigin::NegatedLexical, 0.7, 2};
  collected["quiet"] = {"quiet", WordOrigin::Adjective, 0.5, 4};

  std::ostringstream out;
  write_words(collected, out);
  CHECK(out.str() ==
        "crush\tlexical\t0.300000000\t7\n"
        "not_bad\tnegated_lexical\t0.700000000\t2\n"
        "quiet\tadjective\t0.500000000\t4\n");

  std::istringstream in(out.str());
  auto loaded = read_words(in);
  REQUIRE(loaded.size() == 3);
  CHECK(loaded.at("crush").origin == WordOrigin::Lexical);
  CHECK(loaded.at("crush").prior_positive == 0.3);
  CHECK(loaded.at("crush").corpus_count == 7);
  CHECK(loaded.at("not_bad").origin == WordOrigin::NegatedLexical);
}

TEST_CASE("words reader rejects bad lines with their numbers") {
  std::istringstream missing("crush\tlexical\t0.3\n");
  CHECK_THROWS_WITH_AS(read_words(missing), "words line 1: expected 4 tab-separated fields",
                       InputError);

  std::istringstream origin("ok\tlexical\t0.3\t1\nbad\tmystic\t0.3\t1\n");
  CHECK_THROWS_WITH_AS(read_words(origin), "words line 2: unknown origin: mystic", InputError);

  std::istringstream dup("a\tlexical\t0.3\t1\na\tlexical\t0.3\t1\n");
  CHECK_THROWS_AS(read_words(dup), InputError);

  std::istringstream prob("a\tlexical\tmaybe\t1\n");
  CHECK_THROWS_AS(read_words(prob), InputError);
}

TEST_CASE("triples artifact preserves first-encounter orientation") {
  std::map<PairKey, PairStats> pairs;
  pairs[{"noisy", "powerful", RelationKind::But}] = {2, true};
  pairs[{"efficient", "quiet", RelationKind::And}] = {1, false};

  std::ostringstream out;
  write_triples(pairs, out);
  CHECK(out.str() ==
        "efficient\tAND\tquiet\t1\n"
        "powerful\tBUT\tnoisy\t2\n");

  std::istringstream in(out.str());
  auto loaded = read_triples(in);
  REQUIRE(loaded.size() == 2);
  const auto& but = loaded.at({"noisy", "powerful", RelationKind::But});
  CHECK(but.count == 2);
  CHECK(but.flipped);
  const auto& conj = loaded.at({"efficient", "quiet", RelationKind::And});
  CHECK(conj.count == 1);
  CHECK(!conj.flipped);
}

TEST_CASE("triples reader merges duplicate pairs and validates") {
  std::istringstream dup("a\tAND\tb\t2\nb\tAND\ta\t3\n");
  auto loaded = read_triples(dup);
  REQUIRE(loaded.size() == 1);
  CHECK(loaded.at({"a", "b", RelationKind::And}).count == 5);

  std::istringstream self("a\tAND\ta\t1\n");
  CHECK_THROWS_WITH_AS(read_triples(self), "triples line 1: pair words must differ", InputError);

  std::istringstream kind("a\tXOR\tb\t1\n");
  CHECK_THROWS_AS(read_triples(kind), InputError);
}

TEST_CASE("beliefs artifact keeps nine decimals") {
  std::map<std::string, BeliefVector, std::less<>> beliefs;
  beliefs["quiet"] = {1.0 / 3.0, 2.0 / 3.0};
  beliefs["crush"] = {0.125, 0.875};

  std::ostringstream out;
  write_beliefs(beliefs, out);
  CHECK(out.str() ==
        "crush\t0.125000000\t0.875000000\n"
        "quiet\t0.333333333\t0.666666667\n");

  std::istringstream in(out.str());
  auto loaded = read_beliefs(in);
  CHECK(loaded.at("crush")[0] == 0.125);
  CHECK(loaded.at("quiet")[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-8));

  std::istringstream bad("quiet\t0.5\n");
  CHECK_THROWS_AS(read_beliefs(bad), InputError);
  std::istringstream dup("a\t0.5\t0.5\na\t0.4\t0.6\n");
  CHECK_THROWS_AS(read_beliefs(dup), InputError);
}

TEST_CASE("convergence report round-trips as JSON") {
  ConvergenceReport report;
  report.converged = true;
  report.iterations = 17;
  report.final_delta = 5e-7;

  std::ostringstream out;
  write_convergence(report, out);
  std::istringstream in(out.str());
  auto loaded = read_convergence(in);
  CHECK(loaded.converged);
  CHECK(loaded.iterations == 17);
  CHECK(loaded.final_delta == 5e-7);

  std::istringstream bad("[]");
  CHECK_THROWS_AS(read_convergence(bad), InputError);
}

TEST_CASE("ranked and baseline artifacts are stable TSV") {
  std::vector<RankedWord> ranked;
  ranked.push_back({"crush", Polarity::Negative, 0.9, {0.9, 0.1}, 3});
  ranked.push_back({"goodish", Polarity::Positive, 0.2, {0.8, 0.2}, 2});

  std::ostringstream out;
  write_ranked(ranked, out);
  CHECK(out.str() ==
        "1\tcrush\tnegative\t0.900000000\t0.900000000\t0.100000000\n"
        "2\tgoodish\tpositive\t0.200000000\t0.800000000\t0.200000000\n");

  std::vector<BaselineRankedWord> baseline;
  baseline.push_back({"crush", Polarity::Negative, 0.5, 4});
  std::ostringstream base_out;
  write_baseline_ranked(baseline, base_out);
  CHECK(base_out.str() == "1\tcrush\tnegative\t0.500000000\n");
}

TEST_CASE("delta artifact writes old and new polarity") {
  auto lexicon = SentimentLexicon::from_words({"good"}, {"crush"});
  LexiconDelta delta;
  delta.changes["crush"] = Polarity::Positive;

  std::ostringstream out;
  write_delta(delta, lexicon, out);
  CHECK(out.str() == "crush\tnegative\tpositive\n");

  std::istringstream in(out.str());
  auto loaded = read_delta(in);
  REQUIRE(loaded.changes.size() == 1);
  CHECK(loaded.changes.at("crush") == Polarity::Positive);

  std::istringstream bad("crush\tnegative\tsideways\n");
  CHECK_THROWS_AS(read_delta(bad), InputError);
  std::istringstream dup("crush\tnegative\tpositive\ncrush\tnegative\tpositive\n");
  CHECK_THROWS_AS(read_delta(dup), InputError);
}

TEST_CASE("nonlexical and classified artifacts format their rows") {
  std::vector<NonlexicalWord> words;
  words.push_back({"quiet", WordOrigin::Adjective, {0.75, 0.25}, Polarity::Positive});
  std::ostringstream out;
  write_nonlexical(words, out);
  CHECK(out.str() == "quiet\tadjective\t0.750000000\t0.250000000\tpositive\n");

  std::vector<std::pair<std::string, SentenceScore>> rows;
  rows.push_back({"1", {1.5, Polarity::Positive}});
  rows.push_back({"2", {-1.0, Polarity::Negative}});
  rows.push_back({"3", {0.0, Polarity::Positive}});
  std::ostringstream classified;
  write_classified(rows, classified);
  CHECK(classified.str() ==
        "1\t1.5\tpositive\n"
        "2\t-1\tnegative\n"
        "3\t0\tpositive\n");
}

TEST_CASE("eval artifact nests overall and affected blocks") {
  EvalResult result;
  result.total = 4;
  result.correct = 3;
  result.confusion[0][0] = 2;
  result.confusion[0][1] = 1;
  result.confusion[1][1] = 1;
  result.per_class[0] = {3, 2};
  result.per_class[1] = {1, 1};

  std::ostringstream without;
  write_eval(result, std::nullopt, false, without);
  CHECK(without.str().find("\"affected_only\": null") != std::string::npos);
  CHECK(without.str().find("\"delta_applied\": false") != std::string::npos);
  CHECK(without.str().find("\"accuracy\": 0.75") != std::string::npos);

  EvalResult affected;
  affected.total = 1;
  affected.correct = 1;
  affected.per_class[0] = {1, 1};
  std::ostringstream with;
  write_eval(result, affected, true, with);
  CHECK(with.str().find("\"affected_only\": {") != std::string::npos);
  CHECK(with.str().find("\"delta_applied\": true") != std::string::npos);
}
