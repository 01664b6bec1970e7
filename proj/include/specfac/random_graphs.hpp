#pragma once
#include <cstdint>
#include <random>

#include "specfac/graph.hpp"

namespace specfac {

// G(n, p) conditioned on connectivity by rejection; throws std::runtime_error
// after max_attempts rejections.
Graph random_connected_gnp(int n, double p, std::mt19937_64& rng,
                           int max_attempts = 10000);

// Uniform random labeled tree on n vertices via a random parent sequence
// decoded Pruefer-style.
Graph random_tree(int n, std::mt19937_64& rng);

}  // namespace specfac
