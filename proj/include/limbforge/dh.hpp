#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "limbforge/graph.hpp"

namespace limbforge {

// Adjacency lists over positions 0..n-1. Used where dense bit-rows would not
// fit (10^5 vertices and up).
using AdjList = std::vector<std::vector<std::uint32_t>>;

AdjList to_adjlist(const Graph& g);

enum class PruneKind : std::uint8_t { Pendant, TrueTwin, FalseTwin };

// x was removed as a pendant of y, or as a twin of y.
struct PruneStep {
  std::uint32_t x;
  std::uint32_t y;
  PruneKind kind;
};

struct PruneResult {
  std::vector<PruneStep> steps;  // removal order
  std::vector<std::uint32_t> survivors;
  bool distance_hereditary = false;  // every survivor ended isolated
};

// Greedy pendant/twin elimination. Twins are found through XOR neighbourhood
// hashes and confirmed exactly, so the answer never depends on the hash.
PruneResult prune_sequence(const AdjList& adj);

// Split tree of a DH graph: one node per bag, elements are the positions of
// the graph (0..n-1) followed by marker elements. Marker elements come in
// partner pairs. Every node is complete (K) or a star with a center element.
struct SplitTree {
  struct Node {
    bool complete = true;
    int center = -1;  // star center element; -1 for K nodes
    std::vector<int> elems;
  };
  int nreal = 0;
  std::vector<Node> nodes;
  std::vector<int> node_of;  // element -> node, -1 for isolated positions
  std::vector<int> partner;  // element -> partner marker, -1 when unmarked

  int element_count() const { return static_cast<int>(node_of.size()); }
  bool is_marker(int e) const { return e >= nreal; }
};

// Canonical split decompositions of all components at once, built by
// replaying the pruning sequence backwards. Throws UnsupportedInput when the
// graph is not distance-hereditary.
SplitTree dh_split_tree(const AdjList& adj);

bool is_distance_hereditary(const Graph& g);
bool is_distance_hereditary(const AdjList& adj);

// lrw <= 1: every component is DH with a path-shaped decomposition tree.
bool is_lrw_le_1(const Graph& g);
bool is_lrw_le_1(const AdjList& adj);

// Isomorphism code of a DH graph derived from its canonical split tree. Two
// DH graphs get equal codes iff they are isomorphic.
std::string dh_code(const Graph& g);

}  // namespace limbforge
