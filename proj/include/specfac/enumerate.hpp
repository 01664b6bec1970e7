#pragma once
#include <functional>
#include <vector>

#include "specfac/graph.hpp"

namespace specfac {

// All connected graphs on n vertices, one representative per isomorphism
// class, in a deterministic order (sorted canonical labels). Brute force up
// to n = 6, vertex augmentation with canonical deduplication for 7..9.
std::vector<Graph> enumerate_connected(int n);
void for_each_connected(int n, const std::function<void(const Graph&)>& fn);

}  // namespace specfac
