#pragma once
#include <string>
#include <vector>

#include "specfac/graph.hpp"

namespace specfac {

// Canonical form for graphs on up to 16 vertices, exact (no hashing).
// The label is the graph6 string of the canonically relabeled graph, so two
// graphs are isomorphic iff their labels compare equal.
std::string canonical_label(const Graph& g);
Graph canonical_graph(const Graph& g);
std::vector<int> canonical_permutation(const Graph& g);  // perm[old] = new
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace specfac
