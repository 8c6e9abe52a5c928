#pragma once

/**
 * @file random_graph.hpp
 * @brief Deterministic random graphs and spanning trees for property suites.
 */

#include <vector>

#include "tropcer/multigraph.hpp"
#include "tropcer/xorshift.hpp"

namespace tropcer {

/**
 * Connected bridgeless multigraph: a cycle core on 1..5 vertices plus random
 * chords and loops, with random rational lengths. The genus is uniform in
 * [min_genus, max_genus]; min_genus must be at least 1.
 */
MetricGraph random_bridgeless_graph(XorShift64Star& rng, int min_genus, int max_genus);

/// Spanning tree grown over an rng-shuffled edge order (sorted ids returned).
std::vector<EdgeId> random_spanning_tree(const MetricGraph& graph, XorShift64Star& rng);

}  // namespace tropcer
