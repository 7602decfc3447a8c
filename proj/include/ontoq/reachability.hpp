#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ontoq {

using TermId = std::uint32_t;

// Compressed sparse rows: row i is targets[offsets[i], offsets[i + 1]).
struct CsrRows {
  std::vector<std::size_t> offsets{0};
  std::vector<TermId> targets;

  std::size_t rows() const { return offsets.size() - 1; }
  std::span<const TermId> row(TermId i) const {
    return {targets.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
};

// Full transitive closure of one edge subset. Rows are sorted ascending and
// exclude the node itself.
struct Reachability {
  CsrRows ancestors;
  CsrRows descendants;

  std::size_t pair_count() const { return ancestors.targets.size(); }
};

// Parent lists per node (child -> parents) over the edges to close.
// `topo_order` lists every node with each node after all of its parents.
//
// Columns are processed in blocks: each node carries a bit row for the
// current block of ancestor candidates and inherits its parents' rows with
// word-parallel ORs, so the cost is O(edges * nodes / 64) word operations in
// at most `block_budget_bytes` of scratch.
Reachability compute_reachability(const std::vector<std::vector<TermId>>& parents,
                                  std::span<const TermId> topo_order,
                                  std::size_t block_budget_bytes = std::size_t{64} << 20);

}  // namespace ontoq
