#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dsg/collection.hpp"
#include "dsg/correlation.hpp"

namespace dsg {

/// 2x2 table over (positive, negative) assignments; m[a][b] with 0=positive.
using PotentialMatrix = std::array<std::array<double, 2>, 2>;

/// Per-relation association strengths. Positive epsilon favors agreement,
/// negative favors disagreement; |epsilon| must stay below 0.5 so potentials
/// remain strictly positive.
struct EpsilonTable {
  double eps_and = 0.20;
  double eps_or = 0.10;
  double eps_nb = 0.05;
  double eps_alt = -0.10;
  double eps_but = -0.20;

  double value(RelationKind kind) const;
  void validate() const;  ///< ConfigError on any |epsilon| >= 0.5
};

/// [[0.5+e, 0.5-e], [0.5-e, 0.5+e]]; throws InternalError for |e| >= 0.5.
PotentialMatrix edge_potential(double epsilon);

struct GraphConfig {
  EpsilonTable epsilons;
  std::size_t min_edge_count = 1;  ///< total evidence needed to keep an edge
  bool count_weighted = false;     ///< weight each relation's sum term by its count
};

struct Node {
  std::string form;
  double prior_positive = 0.5;
  WordOrigin origin = WordOrigin::Adjective;
  std::size_t corpus_count = 0;
};

struct Edge {
  std::size_t node1 = 0;  ///< index into nodes(), node1 < node2
  std::size_t node2 = 0;
  std::map<RelationKind, std::size_t> counts;
};

/// Undirected pairwise MRF over collected words. Node and edge order is
/// deterministic for any insertion order: nodes sort by form, edges by
/// (node1, node2).
class MarkovField {
 public:
  std::size_t add_node(Node node);  ///< InternalError on duplicate form
  /// Adds or merges relation counts for an undirected pair; self-loops are
  /// rejected with InternalError.
  void add_edge(std::string_view form1, std::string_view form2, RelationKind kind,
                std::size_t count = 1);

  /// Sorts nodes and edges into canonical order. Called by build_graph and
  /// load_graph; tests composing graphs by hand call it before inference.
  void canonicalize();

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t node_index(std::string_view form) const;  ///< InternalError if absent
  bool has_node(std::string_view form) const;

  /// Effective pairwise potential: entrywise sum of per-relation tables,
  /// optionally count-weighted, renormalized to sum 1.
  PotentialMatrix effective_potential(const Edge& edge, const GraphConfig& config) const;

 private:
  std::vector<Node> nodes_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t, std::less<>> edge_index_;
  std::vector<Edge> edges_;
};

/// Assembles the field from collection and extraction output. Every pair
/// word must be a collected form. Edges whose total relation count falls
/// below min_edge_count are dropped.
MarkovField build_graph(const std::map<std::string, CollectedWord, std::less<>>& collected,
                        const std::map<PairKey, PairStats>& pairs, const GraphConfig& config);

/// Text round-trip: `form<TAB>origin<TAB>prior<TAB>count` node lines (the
/// words.tsv layout), a blank line, then `word1<TAB>KIND<TAB>word2<TAB>count`
/// edge lines (the triples.tsv layout).
void dump_graph(const MarkovField& graph, std::ostream& out);
MarkovField load_graph(std::istream& in);
MarkovField load_graph_file(const std::filesystem::path& path);

}  // namespace dsg
