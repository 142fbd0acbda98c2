// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Tolerances and budgets are pinned as the constants below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dsg/artifacts.hpp"
#include "dsg/classifier.hpp"
#include "dsg/collection.hpp"
#include "dsg/correlation.hpp"
#include "dsg/detection.hpp"
#include "dsg/graph.hpp"
#include "dsg/inference.hpp"
#include "dsg/pipeline.hpp"
#include "dsg/text_util.hpp"
#include "support/planted.hpp"
#include "support/random_graphs.hpp"

using namespace dsg;
namespace fs = std::filesystem;

namespace {

constexpr double kTreeTolerance = 1e-9;        // criterion 3
constexpr double kHandCaseTolerance = 1e-9;    // criterion 4
constexpr double kLoopyMinAgreement = 0.95;    // criterion 5
constexpr double kLoopyMarginFloor = 0.1;      // criterion 5
constexpr double kSymmetryTolerance = 1e-12;   // criterion 9
constexpr double kMinAccuracyGain = 0.10;      // criterion 8
constexpr int kPlantedSeeds = 20;              // criteria 7 and 8
constexpr int kPlantedMinPerfectSeeds = 19;    // criterion 7
constexpr double kGoldenBudgetSeconds = 1.0;   // criterion 1
constexpr double kTreeBudgetSeconds = 30.0;    // criterion 3
constexpr double kPlantedBudgetSeconds = 60.0; // criterion 7

int g_failures = 0;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int number, const std::string& name, bool passed, const std::string& detail,
            double seconds) {
  if (!passed) ++g_failures;
  std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", passed ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str(), seconds);
}

std::string format_two(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

// Shared small fixtures ----------------------------------------------------

const char* kGoldenCorpus =
    "it is efficient and quiet .\n"
    "it worked as expected or better .\n"
    "it is reasonably quiet .\n"
    "it is noisy although efficient .\n"
    "it is powerful but noisy .\n";

struct GoldenTriple {
  const char* left;
  RelationKind kind;
  const char* right;
};

const GoldenTriple kGoldenTriples[] = {
    {"efficient", RelationKind::And, "quiet"},
    {"expected", RelationKind::Or, "better"},
    {"reasonably", RelationKind::NextTo, "quiet"},
    {"noisy", RelationKind::Although, "efficient"},
    {"powerful", RelationKind::But, "noisy"},
};

Node make_node(std::string form, double prior) {
  Node node;
  node.form = std::move(form);
  node.prior_positive = prior;
  node.corpus_count = 1;
  return node;
}

double belief_gap(const std::map<std::string, BeliefVector, std::less<>>& a,
                  const std::map<std::string, BeliefVector, std::less<>>& b) {
  double gap = 0.0;
  for (const auto& [form, belief] : a) {
    auto it = b.find(form);
    if (it == b.end()) return 1.0;
    gap = std::max(gap, std::abs(belief[0] - it->second[0]));
    gap = std::max(gap, std::abs(belief[1] - it->second[1]));
  }
  return gap;
}

// Criterion 1 ---------------------------------------------------------------

void criterion_golden_triples() {
  Timer timer;
  auto lexicon = SentimentLexicon::from_words({"expected", "better"}, {"noisy"});
  ParseOptions options;
  options.lexicon = &lexicon;
  auto corpus = parse_raw_text(kGoldenCorpus, options);
  auto collected = collect_words(corpus, lexicon, {});
  auto triples = extract_triples(corpus, collected, {});

  bool passed = triples.size() == 5;
  std::string detail;
  if (!passed) {
    detail = "expected 5 triples, got " + std::to_string(triples.size());
  } else {
    for (std::size_t i = 0; i < 5; ++i) {
      const std::string& left = triples[i].flipped ? triples[i].word2 : triples[i].word1;
      const std::string& right = triples[i].flipped ? triples[i].word1 : triples[i].word2;
      if (left != kGoldenTriples[i].left || right != kGoldenTriples[i].right ||
          triples[i].kind != kGoldenTriples[i].kind) {
        passed = false;
        detail = "triple " + std::to_string(i + 1) + " is (" + left + ", " +
                 std::string(to_string(triples[i].kind)) + ", " + right + ")";
        break;
      }
    }
  }
  double elapsed = timer.seconds();
  if (passed && elapsed >= kGoldenBudgetSeconds) {
    passed = false;
    detail = "over the 1 s budget";
  }
  if (passed) detail = "all five triples match, printed order preserved";
  report(1, "golden conjunction extraction", passed, detail, elapsed);
}

// Criterion 2 ---------------------------------------------------------------

void criterion_potentials_and_priors() {
  Timer timer;
  struct Expectation {
    double epsilon;
    double agree;
    double disagree;
  };
  const Expectation cases[] = {
      {0.20, 0.70, 0.30}, {0.10, 0.60, 0.40}, {0.05, 0.55, 0.45},
      {-0.10, 0.40, 0.60}, {-0.20, 0.30, 0.70},
  };
  bool passed = true;
  for (const auto& c : cases) {
    auto table = edge_potential(c.epsilon);
    passed = passed && table[0][0] == c.agree && table[1][1] == c.agree &&
             table[0][1] == c.disagree && table[1][0] == c.disagree;
  }

  EpsilonTable eps;
  passed = passed && eps.eps_and == 0.20 && eps.eps_or == 0.10 && eps.eps_nb == 0.05 &&
           eps.eps_alt == -0.10 && eps.eps_but == -0.20;

  PriorTable priors;
  passed = passed && priors.positive == 0.70 && priors.nonlexical == 0.50 &&
           priors.negative == 0.30;
  auto lexicon = SentimentLexicon::from_words({"good"}, {"bad"});
  passed = passed && prior_for(lexicon, "good", priors) == 0.70 &&
           prior_for(lexicon, "bad", priors) == 0.30 &&
           prior_for(lexicon, "quiet", priors) == 0.50;

  report(2, "edge potentials and priors", passed,
         passed ? "all five tables and all three priors match exactly" : "exact match failed",
         timer.seconds());
}

// Criterion 3 ---------------------------------------------------------------

void criterion_trees_match_enumeration() {
  Timer timer;
  std::mt19937 rng(31);
  InferenceParams params;
  params.tolerance = 1e-12;
  params.max_iterations = 200;

  double worst = 0.0;
  int checked = 0;
  bool passed = true;
  std::string detail;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + testsupport::draw_index(rng, 11);
    auto graph = testsupport::random_tree(rng, n);
    auto result = propagate(graph, params, {});
    if (!result.report.converged) {
      passed = false;
      detail = "tree trial " + std::to_string(trial) + " did not converge";
      break;
    }
    double gap = belief_gap(result.beliefs, exact_marginals(graph, {}));
    worst = std::max(worst, gap);
    ++checked;
    if (gap > kTreeTolerance) {
      passed = false;
      detail = "tree trial " + std::to_string(trial) + " off by " + std::to_string(gap);
      break;
    }
  }
  double elapsed = timer.seconds();
  if (passed && elapsed >= kTreeBudgetSeconds) {
    passed = false;
    detail = "over the 30 s budget";
  }
  if (passed) {
    std::ostringstream message;
    message << checked << " random trees, worst gap " << worst;
    detail = message.str();
  }
  report(3, "exact inference on trees", passed, detail, elapsed);
}

// Criterion 4 ---------------------------------------------------------------

void criterion_two_node_hand_case() {
  Timer timer;
  auto build = [](RelationKind kind) {
    MarkovField graph;
    graph.add_node(make_node("anchor", 0.7));
    graph.add_node(make_node("unknown", 0.5));
    graph.add_edge("anchor", "unknown", kind);
    graph.canonicalize();
    return graph;
  };

  auto and_beliefs = propagate(build(RelationKind::And), {}, {}).beliefs;
  auto but_beliefs = propagate(build(RelationKind::But), {}, {}).beliefs;

  bool passed = std::abs(and_beliefs.at("unknown")[0] - 0.58) <= kHandCaseTolerance &&
                std::abs(and_beliefs.at("unknown")[1] - 0.42) <= kHandCaseTolerance &&
                std::abs(but_beliefs.at("unknown")[0] - 0.42) <= kHandCaseTolerance &&
                std::abs(but_beliefs.at("unknown")[1] - 0.58) <= kHandCaseTolerance;
  report(4, "two-node hand case", passed,
         passed ? "AND neighbor [0.58, 0.42], BUT neighbor [0.42, 0.58]" : "beliefs off",
         timer.seconds());
}

// Criterion 5 ---------------------------------------------------------------

void criterion_loopy_argmax_agreement() {
  Timer timer;
  std::mt19937 rng(57);
  InferenceParams params;
  params.tolerance = 1e-8;
  params.max_iterations = 500;
  params.damping = 0.3;

  std::size_t decided = 0;
  std::size_t agreeing = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 3 + testsupport::draw_index(rng, 10);
    auto graph = testsupport::random_loopy(rng, n, 1 + testsupport::draw_index(rng, 3));
    auto loopy = propagate(graph, params, {}).beliefs;
    auto exact = exact_marginals(graph, {});
    for (const auto& [form, belief] : exact) {
      if (std::abs(belief[0] - belief[1]) < kLoopyMarginFloor) continue;
      ++decided;
      bool exact_positive = belief[0] > belief[1];
      bool loopy_positive = loopy.at(form)[0] > loopy.at(form)[1];
      if (exact_positive == loopy_positive) ++agreeing;
    }
  }
  double share = decided == 0 ? 0.0 : static_cast<double>(agreeing) / decided;
  bool passed = decided > 0 && share >= kLoopyMinAgreement;
  std::ostringstream message;
  message << agreeing << "/" << decided << " decided nodes agree (" << format_two(share * 100)
          << "%)";
  report(5, "loopy argmax sanity", passed, message.str(), timer.seconds());
}

// Criterion 6 ---------------------------------------------------------------

void criterion_conflict_score_units() {
  Timer timer;
  bool passed = polarity_conflict_score(Polarity::Positive, {0.9, 0.1}) == 0.1 &&
                polarity_conflict_score(Polarity::Negative, {0.7, 0.3}) == 0.7 &&
                polarity_conflict_score(Polarity::Positive, {0.5, 0.5}) == 0.5 &&
                polarity_conflict_score(Polarity::Negative, {0.5, 0.5}) == 0.5;
  report(6, "conflict score units", passed,
         passed ? "all four hand values exact" : "hand values off", timer.seconds());
}

// Criteria 7 and 8 ----------------------------------------------------------

struct SeedOutcome {
  std::size_t dsg_hits = 0;
  std::size_t lci_hits = 0;
  double before_accuracy = 0.0;
  double after_accuracy = 0.0;
};

SeedOutcome evaluate_seed(std::uint32_t seed) {
  auto fixture = testsupport::make_planted_fixture(seed);
  auto lexicon = SentimentLexicon::from_words(fixture.positive_words, fixture.negative_words);
  ParseOptions options;
  options.lexicon = &lexicon;
  auto corpus = parse_raw_text(fixture.corpus_text, options);

  auto collected = collect_words(corpus, lexicon, {});
  auto pairs = aggregate(extract_triples(corpus, collected, {}));
  auto graph = build_graph(collected, pairs, {});

  InferenceParams params;
  params.tolerance = 1e-8;
  params.max_iterations = 300;
  params.damping = 0.1;
  auto inference = propagate(graph, params, {});

  auto ranked = rank_conflicts(inference.beliefs, collected, lexicon);
  std::set<std::string> planted(fixture.planted.begin(), fixture.planted.end());

  SeedOutcome outcome;
  auto top10 = detect_top_n(ranked, 10);
  for (const auto& word : top10) outcome.dsg_hits += planted.count(word.form);

  auto baseline = rank_instability(corpus, lexicon);
  for (std::size_t i = 0; i < baseline.size() && i < 10; ++i) {
    outcome.lci_hits += planted.count(baseline[i].form);
  }

  std::vector<LabeledSentence> labeled;
  labeled.reserve(corpus.sentences.size());
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    labeled.push_back({corpus.sentences[i], fixture.labeled[i].second});
  }
  ClassifierConfig classifier;
  outcome.before_accuracy = evaluate(labeled, lexicon, classifier).accuracy();

  auto delta = delta_from_ranked(top10, lexicon);
  auto corrected = apply_delta(lexicon, delta);
  outcome.after_accuracy = evaluate(labeled, corrected, classifier).accuracy();
  return outcome;
}

void criteria_planted_detection_and_gain() {
  Timer timer;
  int perfect_seeds = 0;
  double dsg_total = 0.0;
  double lci_total = 0.0;
  double gain_total = 0.0;
  double worst_gain = 1.0;
  for (int seed = 1; seed <= kPlantedSeeds; ++seed) {
    auto outcome = evaluate_seed(static_cast<std::uint32_t>(seed));
    if (outcome.dsg_hits == 5) ++perfect_seeds;
    dsg_total += static_cast<double>(outcome.dsg_hits);
    lci_total += static_cast<double>(outcome.lci_hits);
    double gain = outcome.after_accuracy - outcome.before_accuracy;
    gain_total += gain;
    worst_gain = std::min(worst_gain, gain);
  }
  double elapsed = timer.seconds();
  double dsg_mean = dsg_total / kPlantedSeeds;
  double lci_mean = lci_total / kPlantedSeeds;
  double gain_mean = gain_total / kPlantedSeeds;

  bool detection_passed =
      perfect_seeds >= kPlantedMinPerfectSeeds && lci_mean < dsg_mean && elapsed < kPlantedBudgetSeconds;
  std::ostringstream detection;
  detection << "all five planted in " << perfect_seeds << "/" << kPlantedSeeds
            << " seeds, mean hits " << format_two(dsg_mean) << " vs LCI " << format_two(lci_mean);
  if (elapsed >= kPlantedBudgetSeconds) detection << ", over the 60 s budget";
  report(7, "planted polarity-change detection", detection_passed, detection.str(), elapsed);

  bool gain_passed = gain_mean >= kMinAccuracyGain;
  std::ostringstream gain;
  gain << "mean accuracy gain " << format_two(gain_mean * 100) << " points, worst seed "
       << format_two(worst_gain * 100);
  report(8, "before/after classification gain", gain_passed, gain.str(), 0.0);
}

// Criterion 9 ---------------------------------------------------------------

void criterion_prior_flip_symmetry() {
  Timer timer;
  std::mt19937 rng(91);
  double worst = 0.0;
  bool passed = true;
  for (int trial = 0; trial < 50 && passed; ++trial) {
    std::size_t n = 3 + testsupport::draw_index(rng, 10);
    auto shape = testsupport::random_loopy(rng, n, 1 + testsupport::draw_index(rng, 3));

    MarkovField base;
    MarkovField mirrored;
    for (const Node& node : shape.nodes()) {
      double prior = static_cast<double>(13 + testsupport::draw_index(rng, 231)) / 256.0;
      Node copy = node;
      copy.prior_positive = prior;
      base.add_node(copy);
      copy.prior_positive = 1.0 - prior;
      mirrored.add_node(copy);
    }
    for (const Edge& edge : shape.edges()) {
      for (const auto& [kind, count] : edge.counts) {
        base.add_edge(shape.nodes()[edge.node1].form, shape.nodes()[edge.node2].form, kind, count);
        mirrored.add_edge(shape.nodes()[edge.node1].form, shape.nodes()[edge.node2].form, kind,
                          count);
      }
    }
    base.canonicalize();
    mirrored.canonicalize();

    InferenceParams params;
    params.max_iterations = 80;
    params.tolerance = 1e-10;
    auto straight = propagate(base, params, {}).beliefs;
    auto flipped = propagate(mirrored, params, {}).beliefs;
    for (const auto& [form, belief] : straight) {
      const auto& mirror = flipped.at(form);
      worst = std::max(worst, std::abs(mirror[0] - belief[1]));
      worst = std::max(worst, std::abs(mirror[1] - belief[0]));
    }
    passed = worst <= kSymmetryTolerance;
  }
  std::ostringstream message;
  message << "worst component discrepancy " << worst;
  report(9, "prior-flip symmetry", passed, message.str(), timer.seconds());
}

// Criterion 10 --------------------------------------------------------------

void criterion_pipeline_determinism() {
  Timer timer;
  fs::path dir = fs::temp_directory_path() / "dsg_acceptance" / "determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);

  auto fixture = testsupport::make_planted_fixture(1);
  {
    std::ofstream corpus(dir / "corpus.txt");
    corpus << fixture.corpus_text;
    std::ofstream pos(dir / "pos.txt");
    for (const auto& word : fixture.positive_words) pos << word << '\n';
    std::ofstream neg(dir / "neg.txt");
    for (const auto& word : fixture.negative_words) neg << word << '\n';
    std::ofstream labels(dir / "labels.csv");
    for (const auto& [text, label] : fixture.labeled) {
      labels << text << ',' << to_string(label) << '\n';
    }
  }

  PipelineInputs inputs;
  inputs.corpus_path = dir / "corpus.txt";
  inputs.positive_words = dir / "pos.txt";
  inputs.negative_words = dir / "neg.txt";
  inputs.labeled_path = dir / "labels.csv";
  inputs.label_format = LabelFormat::Csv;

  inputs.output_dir = dir / "run1";
  run_pipeline(inputs, PipelineConfig{});
  inputs.output_dir = dir / "run2";
  run_pipeline(inputs, PipelineConfig{});

  const char* names[] = {"words.tsv",  "triples.tsv", "beliefs.tsv",
                         "convergence.json", "ranked.tsv",  "delta.tsv",
                         "nonlexical.tsv",   "eval_before.json", "eval_after.json"};
  bool passed = true;
  std::string detail = "nine artifacts byte-identical across runs";
  for (const char* name : names) {
    if (read_file(dir / "run1" / name) != read_file(dir / "run2" / name)) {
      passed = false;
      detail = std::string(name) + " differs between runs";
      break;
    }
  }
  report(10, "pipeline determinism", passed, detail, timer.seconds());
}

}  // namespace

int main() {
  criterion_golden_triples();
  criterion_potentials_and_priors();
  criterion_trees_match_enumeration();
  criterion_two_node_hand_case();
  criterion_loopy_argmax_agreement();
  criterion_conflict_score_units();
  criteria_planted_detection_and_gain();
  criterion_prior_flip_symmetry();
  criterion_pipeline_determinism();

  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
