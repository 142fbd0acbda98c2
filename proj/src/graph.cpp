#include "dsg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "dsg/errors.hpp"
#include "dsg/text_util.hpp"

namespace dsg {

double EpsilonTable::value(RelationKind kind) const {
  switch (kind) {
    case RelationKind::And: return eps_and;
    case RelationKind::Or: return eps_or;
    case RelationKind::NextTo: return eps_nb;
    case RelationKind::Although: return eps_alt;
    case RelationKind::But: break;
  }
  return eps_but;
}

void EpsilonTable::validate() const {
  for (double e : {eps_and, eps_or, eps_nb, eps_alt, eps_but}) {
    if (!(std::abs(e) < 0.5)) {
      throw ConfigError("relation strength out of range, need |epsilon| < 0.5");
    }
  }
}

PotentialMatrix edge_potential(double epsilon) {
  if (!(std::abs(epsilon) < 0.5)) {
    throw InternalError("edge potential requires |epsilon| < 0.5");
  }
  double agree = 0.5 + epsilon;
  double disagree = 0.5 - epsilon;
  return {{{agree, disagree}, {disagree, agree}}};
}

std::size_t MarkovField::add_node(Node node) {
  auto [it, inserted] = index_.emplace(node.form, nodes_.size());
  if (!inserted) throw InternalError("duplicate graph node: " + node.form);
  nodes_.push_back(std::move(node));
  return it->second;
}

void MarkovField::add_edge(std::string_view form1, std::string_view form2, RelationKind kind,
                           std::size_t count) {
  std::size_t a = node_index(form1);
  std::size_t b = node_index(form2);
  if (a == b) throw InternalError("self edge on graph node: " + std::string(form1));
  if (a > b) std::swap(a, b);
  auto key = std::make_pair(a, b);
  auto it = edge_index_.find(key);
  if (it == edge_index_.end()) {
    Edge edge;
    edge.node1 = a;
    edge.node2 = b;
    edge.counts[kind] = count;
    edge_index_.emplace(key, edges_.size());
    edges_.push_back(std::move(edge));
  } else {
    edges_[it->second].counts[kind] += count;
  }
}

void MarkovField::canonicalize() {
  std::vector<std::size_t> order(nodes_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [this](std::size_t a, std::size_t b) { return nodes_[a].form < nodes_[b].form; });

  std::vector<std::size_t> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  std::vector<Node> sorted;
  sorted.reserve(nodes_.size());
  for (std::size_t old : order) sorted.push_back(std::move(nodes_[old]));
  nodes_ = std::move(sorted);

  index_.clear();
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_[nodes_[i].form] = i;

  for (Edge& edge : edges_) {
    edge.node1 = position[edge.node1];
    edge.node2 = position[edge.node2];
    if (edge.node1 > edge.node2) std::swap(edge.node1, edge.node2);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.node1, a.node2) < std::tie(b.node1, b.node2);
  });
  edge_index_.clear();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    edge_index_[std::make_pair(edges_[i].node1, edges_[i].node2)] = i;
  }
}

std::size_t MarkovField::node_index(std::string_view form) const {
  auto it = index_.find(form);
  if (it == index_.end()) throw InternalError("unknown graph node: " + std::string(form));
  return it->second;
}

bool MarkovField::has_node(std::string_view form) const { return index_.count(form) != 0; }

PotentialMatrix MarkovField::effective_potential(const Edge& edge, const GraphConfig& config) const {
  PotentialMatrix sum{{{0.0, 0.0}, {0.0, 0.0}}};
  for (const auto& [kind, count] : edge.counts) {
    if (count == 0) continue;
    PotentialMatrix table = edge_potential(config.epsilons.value(kind));
    double weight = config.count_weighted ? static_cast<double>(count) : 1.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) sum[a][b] += weight * table[a][b];
    }
  }
  double total = sum[0][0] + sum[0][1] + sum[1][0] + sum[1][1];
  if (total <= 0.0) throw InternalError("edge without relation evidence");
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) sum[a][b] /= total;
  }
  return sum;
}

MarkovField build_graph(const std::map<std::string, CollectedWord, std::less<>>& collected,
                        const std::map<PairKey, PairStats>& pairs, const GraphConfig& config) {
  config.epsilons.validate();
  MarkovField graph;
  for (const auto& [form, word] : collected) {
    Node node;
    node.form = form;
    node.prior_positive = word.prior_positive;
    node.origin = word.origin;
    node.corpus_count = word.corpus_count;
    graph.add_node(std::move(node));
  }

  // Total evidence per word pair decides whether the edge exists at all.
  std::map<std::pair<std::string, std::string>, std::size_t> totals;
  for (const auto& [key, stats] : pairs) {
    totals[std::make_pair(key.word1, key.word2)] += stats.count;
  }
  for (const auto& [key, stats] : pairs) {
    if (collected.count(key.word1) == 0 || collected.count(key.word2) == 0) {
      throw InternalError("edge references uncollected word: " + key.word1 + "/" + key.word2);
    }
    if (totals[std::make_pair(key.word1, key.word2)] < config.min_edge_count) continue;
    graph.add_edge(key.word1, key.word2, key.kind, stats.count);
  }
  graph.canonicalize();
  return graph;
}

void dump_graph(const MarkovField& graph, std::ostream& out) {
  // Node lines share the words.tsv layout, edge lines the triples.tsv layout
  // (canonical word order), so stage artifacts and graph dumps interchange.
  for (const Node& node : graph.nodes()) {
    out << node.form << '\t' << to_string(node.origin) << '\t'
        << format_prob(node.prior_positive) << '\t' << node.corpus_count << '\n';
  }
  out << '\n';
  for (const Edge& edge : graph.edges()) {
    for (const auto& [kind, count] : edge.counts) {
      out << graph.nodes()[edge.node1].form << '\t' << to_string(kind) << '\t'
          << graph.nodes()[edge.node2].form << '\t' << count << '\n';
    }
  }
}

MarkovField load_graph(std::istream& in) {
  MarkovField graph;
  bool in_edges = false;
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (trim(line).empty()) {
      in_edges = true;
      return;
    }
    auto fields = split_tabs(line);
    auto fail = [&](const std::string& what) {
      throw InputError("graph line " + std::to_string(lineno) + ": " + what);
    };
    try {
      if (!in_edges) {
        if (fields.size() != 4) fail("expected form<TAB>origin<TAB>prior<TAB>count");
        Node node;
        node.form = std::string(fields[0]);
        auto origin = parse_word_origin(fields[1]);
        if (!origin) fail("unknown origin: " + std::string(fields[1]));
        node.origin = *origin;
        node.prior_positive = std::stod(std::string(fields[2]));
        node.corpus_count = std::stoull(std::string(fields[3]));
        graph.add_node(std::move(node));
      } else {
        if (fields.size() != 4) fail("expected word1<TAB>KIND<TAB>word2<TAB>count");
        auto kind = parse_relation_kind(fields[1]);
        if (!kind) fail("unknown relation kind: " + std::string(fields[1]));
        graph.add_edge(fields[0], fields[2], *kind, std::stoull(std::string(fields[3])));
      }
    } catch (const InputError&) {
      throw;
    } catch (const InternalError& e) {
      fail(e.what());
    } catch (const std::invalid_argument&) {
      fail("malformed number");
    } catch (const std::out_of_range&) {
      fail("number out of range");
    }
  });
  graph.canonicalize();
  return graph;
}

MarkovField load_graph_file(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_graph(in);
}

}  // namespace dsg
