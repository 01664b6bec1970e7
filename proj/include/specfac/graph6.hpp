#pragma once
#include <string>

#include "specfac/graph.hpp"

namespace specfac {

// Standard printable graph6 encoding: order header, then the upper triangle
// read column by column, packed 6 bits per character with offset 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);  // throws std::invalid_argument on malformed input

}  // namespace specfac
