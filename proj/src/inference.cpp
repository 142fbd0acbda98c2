#include "dsg/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dsg/errors.hpp"

namespace dsg {

namespace {

constexpr double kRescaleFloor = 1e-300;

BeliefVector normalized(double positive, double negative) {
  double total = positive + negative;
  if (total < kRescaleFloor) throw InternalError("belief underflow");
  return {positive / total, negative / total};
}

struct DirectedMessage {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t edge = 0;
  bool from_node1 = false;  ///< source == edge.node1
};

}  // namespace

void InferenceParams::validate() const {
  if (max_iterations == 0) throw ConfigError("max_iterations must be positive");
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (damping < 0.0 || damping >= 1.0) throw ConfigError("damping must lie in [0, 1)");
}

InferenceResult propagate(const MarkovField& graph, const InferenceParams& params,
                          const GraphConfig& config) {
  params.validate();
  const auto& nodes = graph.nodes();
  const auto& edges = graph.edges();

  // Directed message list plus per-node incoming index so products over
  // N(i) \ {j} can use the prefix/suffix trick instead of division.
  std::vector<DirectedMessage> messages;
  messages.reserve(edges.size() * 2);
  std::vector<std::vector<std::size_t>> incoming(nodes.size());
  std::vector<PotentialMatrix> potentials(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    potentials[e] = graph.effective_potential(edges[e], config);
    messages.push_back({edges[e].node1, edges[e].node2, e, true});
    incoming[edges[e].node2].push_back(messages.size() - 1);
    messages.push_back({edges[e].node2, edges[e].node1, e, false});
    incoming[edges[e].node1].push_back(messages.size() - 1);
  }
  // The reverse of each message: messages come in node1->node2 pairs.
  auto reverse_of = [](std::size_t m) { return m ^ std::size_t{1}; };

  // Slot of the reverse message within incoming[source]; the product over
  // N(source) \ {target} excludes exactly that slot.
  std::vector<std::size_t> excluded_slot(messages.size(), 0);
  for (std::size_t m = 0; m < messages.size(); ++m) {
    const auto& in = incoming[messages[m].source];
    std::size_t slot = 0;
    while (slot < in.size() && in[slot] != reverse_of(m)) ++slot;
    excluded_slot[m] = slot;
  }

  std::vector<BeliefVector> current(messages.size(), BeliefVector{0.5, 0.5});
  std::vector<BeliefVector> next(messages.size());

  ConvergenceReport report;
  for (std::size_t iteration = 1; iteration <= params.max_iterations; ++iteration) {
    // Pre-aggregate, per node, the product of all incoming messages as
    // prefix * suffix around each message's slot.
    std::vector<std::vector<BeliefVector>> context(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& in = incoming[i];
      std::vector<BeliefVector>& slots = context[i];
      slots.assign(in.size(), BeliefVector{1.0, 1.0});
      BeliefVector prefix{1.0, 1.0};
      for (std::size_t k = 0; k < in.size(); ++k) {
        slots[k] = prefix;
        prefix[0] *= current[in[k]][0];
        prefix[1] *= current[in[k]][1];
        if (prefix[0] + prefix[1] < kRescaleFloor) {
          double scale = 1.0 / std::max(prefix[0], prefix[1]);
          prefix[0] *= scale;
          prefix[1] *= scale;
        }
      }
      BeliefVector suffix{1.0, 1.0};
      for (std::size_t k = in.size(); k-- > 0;) {
        slots[k][0] *= suffix[0];
        slots[k][1] *= suffix[1];
        double norm = slots[k][0] + slots[k][1];
        if (norm >= kRescaleFloor) {
          slots[k][0] /= norm;
          slots[k][1] /= norm;
        }
        suffix[0] *= current[in[k]][0];
        suffix[1] *= current[in[k]][1];
        if (suffix[0] + suffix[1] < kRescaleFloor) {
          double scale = 1.0 / std::max(suffix[0], suffix[1]);
          suffix[0] *= scale;
          suffix[1] *= scale;
        }
      }
    }

    double delta = 0.0;
    for (std::size_t m = 0; m < messages.size(); ++m) {
      const DirectedMessage& msg = messages[m];
      BeliefVector gathered = context[msg.source][excluded_slot[m]];

      const Node& source = nodes[msg.source];
      double psi[2] = {source.prior_positive, 1.0 - source.prior_positive};
      const PotentialMatrix& pot = potentials[msg.edge];

      BeliefVector fresh{0.0, 0.0};
      for (int target_state = 0; target_state < 2; ++target_state) {
        double sum = 0.0;
        for (int source_state = 0; source_state < 2; ++source_state) {
          double pair = msg.from_node1 ? pot[source_state][target_state]
                                       : pot[target_state][source_state];
          sum += pair * psi[source_state] * gathered[source_state];
        }
        fresh[target_state] = sum;
      }
      fresh = normalized(fresh[0], fresh[1]);
      if (params.damping > 0.0) {
        fresh[0] = params.damping * current[m][0] + (1.0 - params.damping) * fresh[0];
        fresh[1] = params.damping * current[m][1] + (1.0 - params.damping) * fresh[1];
      }
      delta = std::max({delta, std::abs(fresh[0] - current[m][0]),
                        std::abs(fresh[1] - current[m][1])});
      next[m] = fresh;
    }
    current.swap(next);
    report.iterations = iteration;
    report.final_delta = delta;
    if (delta <= params.tolerance) {
      report.converged = true;
      break;
    }
  }

  InferenceResult result;
  result.report = report;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double positive = nodes[i].prior_positive;
    double negative = 1.0 - nodes[i].prior_positive;
    for (std::size_t m : incoming[i]) {
      positive *= current[m][0];
      negative *= current[m][1];
      double norm = positive + negative;
      if (norm < kRescaleFloor) throw InternalError("belief underflow");
      positive /= norm;
      negative /= norm;
    }
    result.beliefs[nodes[i].form] = normalized(positive, negative);
  }
  return result;
}

std::map<std::string, BeliefVector, std::less<>> exact_marginals(const MarkovField& graph,
                                                                 const GraphConfig& config) {
  const auto& nodes = graph.nodes();
  const auto& edges = graph.edges();
  if (nodes.size() > 20) {
    throw std::invalid_argument("exact enumeration capped at 20 nodes");
  }

  std::vector<PotentialMatrix> potentials(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    potentials[e] = graph.effective_potential(edges[e], config);
  }

  std::vector<std::array<double, 2>> mass(nodes.size(), {0.0, 0.0});
  const std::size_t total = std::size_t{1} << nodes.size();
  for (std::size_t assignment = 0; assignment < total; ++assignment) {
    // Bit i set means node i takes the negative state.
    auto state = [&](std::size_t i) { return (assignment >> i) & 1u; };
    double weight = 1.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      weight *= state(i) ? 1.0 - nodes[i].prior_positive : nodes[i].prior_positive;
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      weight *= potentials[e][state(edges[e].node1)][state(edges[e].node2)];
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      mass[i][state(i)] += weight;
    }
  }

  std::map<std::string, BeliefVector, std::less<>> beliefs;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    beliefs[nodes[i].form] = normalized(mass[i][0], mass[i][1]);
  }
  return beliefs;
}

}  // namespace dsg
