#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "dsg/graph.hpp"

namespace dsg {

/// [P(positive), P(negative)], normalized to sum 1.
using BeliefVector = std::array<double, 2>;

struct InferenceParams {
  std::size_t max_iterations = 100;
  double tolerance = 1e-6;  ///< max-norm message change counted as converged
  double damping = 0.0;     ///< new = damping * old + (1 - damping) * fresh

  void validate() const;  ///< ConfigError on out-of-range values
};

struct ConvergenceReport {
  std::size_t iterations = 0;
  double final_delta = 0.0;
  bool converged = false;
};

struct InferenceResult {
  std::map<std::string, BeliefVector, std::less<>> beliefs;
  ConvergenceReport report;
};

/// Synchronous loopy belief propagation. All messages update from the
/// previous iteration's values (flooding schedule), so results are
/// independent of node order. Exact on trees.
InferenceResult propagate(const MarkovField& graph, const InferenceParams& params,
                          const GraphConfig& config);

/// Brute-force marginals by enumerating all 2^n assignments. Test oracle;
/// throws std::invalid_argument beyond 20 nodes.
std::map<std::string, BeliefVector, std::less<>> exact_marginals(const MarkovField& graph,
                                                                 const GraphConfig& config);

}  // namespace dsg
