#pragma once
#include <string>
#include <vector>

#include "specfac/graph.hpp"

namespace specfac {

bool is_tree(const Graph& g);

// Canonical certificate for unlabeled trees (center-rooted subtree encoding).
// Two trees get equal certificates iff they are isomorphic.  Works for any n.
std::string tree_certificate(const Graph& g);

// All unlabeled trees on n vertices, one per isomorphism class.
std::vector<Graph> enumerate_trees(int n);

// All trees whose degrees all lie in {1,3}, with at most max_internal
// degree-3 vertices.  Includes K_2 (zero internal vertices).
std::vector<Graph> generate_13_trees(int max_internal);

// Subdivide every edge once and attach a pendant to every original leaf.
// Vertex layout: original ids first, then one subdivision vertex per edge in
// sorted edge order, then pendants in leaf order.
Graph expand_to_T3(const Graph& r);

// Recognize the expanded family by reversing the construction.
bool is_T3_member(const Graph& g);

// Every member with at most max_n vertices (members have 5i+5 vertices).
std::vector<Graph> t3_members_up_to(int max_n);

}  // namespace specfac
