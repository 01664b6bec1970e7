#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "specfac/config.hpp"
#include "specfac/graph.hpp"

namespace specfac {

enum class BlockKind { P2, C3, P5, T3 };

const char* block_kind_name(BlockKind k);

struct FactorBlock {
  BlockKind kind = BlockKind::P2;
  std::vector<int> vertices;          // vertices of g covered by this block
  std::vector<Edge> edges;            // edges of g used by this block
};

struct FactorCertificate {
  std::vector<FactorBlock> blocks;
};

struct FactorSearchResult {
  bool found = false;
  FactorCertificate certificate;  // valid when found
};

// Exhaustive search for a spanning subgraph whose components each belong to
// the allowed family.  Sound both ways within the caps: a returned
// certificate always verifies, and found == false means no factor exists.
// Throws inconclusive_error if a negative answer would depend on a block
// whose spanning-tree enumeration hit tree_cap, and cap_error for n beyond
// max_n or blocks beyond block_cap.
FactorSearchResult find_factor(const Graph& g, int max_n = kFactorSearchCap,
                               int block_cap = kBlockSizeCap,
                               long tree_cap = kSpanningTreeCap);

// Checks a certificate against g: blocks partition the vertex set, every
// block edge is an edge of g, and each block's edge set forms a member of
// its claimed family on its vertices.  On failure `reason` says what broke.
bool verify_certificate(const Graph& g, const FactorCertificate& cert,
                        std::string* reason = nullptr);

// Enumerate spanning trees of the induced subgraph on `vertices`, invoking
// fn on each (as a Graph on those vertices relabeled 0..k-1); stops early if
// fn returns true.  Returns {stopped_early, enumerated_count, hit_cap}.
struct SpanningTreeScan {
  bool stopped = false;
  long count = 0;
  bool capped = false;
};
SpanningTreeScan scan_spanning_trees(const Graph& g, const std::vector<int>& vertices,
                                     long cap,
                                     const std::function<bool(const Graph&)>& fn);

}  // namespace specfac
