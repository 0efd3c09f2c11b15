#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "limbforge/dh.hpp"
#include "limbforge/graph.hpp"

namespace limbforge {

using Rng = std::mt19937_64;

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center 0
// Height counts edges on a root-to-leaf path; height 0 is K_1.
Graph complete_binary_tree(std::size_t height);

// All graphs on n vertices up to isomorphism, sorted by canonical form.
std::vector<Graph> all_graphs(std::size_t n);
std::vector<Graph> all_connected_graphs(std::size_t n);
// Connected DH graphs on n vertices up to isomorphism (pendant/twin growth).
std::vector<Graph> all_connected_dh_graphs(std::size_t n);

Graph random_graph(std::size_t n, double p, Rng& rng);
Graph random_connected_graph(std::size_t n, double p, Rng& rng);
// Connected DH graph from a random pendant / true twin / false twin sequence.
Graph random_dh_graph(std::size_t n, Rng& rng);
Graph random_tree(std::size_t n, Rng& rng);
// Random caterpillar with twin blow-ups of its spine and legs, as adjacency
// lists (dense rows would not fit at this scale). lrw <= 1 by construction.
AdjList caterpillar_with_twins(std::size_t n, Rng& rng);
// Random vertex relabeling with fresh ids.
Graph random_relabel(const Graph& g, Rng& rng);

}  // namespace limbforge
