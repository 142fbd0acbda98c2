#pragma once

#include <cstdio>
#include <random>
#include <string>

#include "dsg/graph.hpp"

// Random graph builders shared by the unit and acceptance suites. Integer and
// real draws go through the raw engine (not std distributions) so fixtures are
// stable across standard library implementations.

namespace testsupport {

inline std::size_t draw_index(std::mt19937& rng, std::size_t n) {
  return static_cast<std::size_t>(rng()) % n;
}

inline double draw_real(std::mt19937& rng, double lo, double hi) {
  double unit = rng() * (1.0 / 4294967296.0);
  return lo + (hi - lo) * unit;
}

inline dsg::RelationKind draw_kind(std::mt19937& rng) {
  switch (draw_index(rng, 5)) {
    case 0: return dsg::RelationKind::And;
    case 1: return dsg::RelationKind::Or;
    case 2: return dsg::RelationKind::NextTo;
    case 3: return dsg::RelationKind::Although;
    default: return dsg::RelationKind::But;
  }
}

inline std::string node_name(std::size_t i) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "n%02zu", i);
  return buf;
}

inline dsg::MarkovField random_tree(std::mt19937& rng, std::size_t n) {
  dsg::MarkovField graph;
  for (std::size_t i = 0; i < n; ++i) {
    dsg::Node node;
    node.form = node_name(i);
    node.prior_positive = draw_real(rng, 0.05, 0.95);
    node.corpus_count = 1 + draw_index(rng, 5);
    graph.add_node(std::move(node));
  }
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t parent = draw_index(rng, i);
    graph.add_edge(node_name(parent), node_name(i), draw_kind(rng), 1 + draw_index(rng, 3));
  }
  graph.canonicalize();
  return graph;
}

/// Random connected graph: a spanning tree plus `extra_edges` chords. Chords
/// may duplicate tree edges, which merges relation counts onto one edge.
inline dsg::MarkovField random_loopy(std::mt19937& rng, std::size_t n, std::size_t extra_edges) {
  dsg::MarkovField graph = random_tree(rng, n);
  for (std::size_t added = 0; added < extra_edges && n >= 2;) {
    std::size_t a = draw_index(rng, n);
    std::size_t b = draw_index(rng, n);
    if (a == b) continue;
    graph.add_edge(node_name(a), node_name(b), draw_kind(rng), 1 + draw_index(rng, 3));
    ++added;
  }
  graph.canonicalize();
  return graph;
}

}  // namespace testsupport
