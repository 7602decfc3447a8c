#include "ontoq/reachability.hpp"

#include <algorithm>

#include "ontoq/simd/bitset_kernels.hpp"

namespace ontoq {

namespace {

CsrRows flatten(std::vector<std::vector<TermId>>& lists) {
  CsrRows rows;
  rows.offsets.resize(lists.size() + 1);
  std::size_t total = 0;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    rows.offsets[i] = total;
    total += lists[i].size();
  }
  rows.offsets[lists.size()] = total;
  rows.targets.reserve(total);
  for (auto& list : lists) {
    rows.targets.insert(rows.targets.end(), list.begin(), list.end());
    std::vector<TermId>().swap(list);
  }
  return rows;
}

CsrRows transpose(const CsrRows& rows) {
  const std::size_t n = rows.rows();
  CsrRows out;
  out.offsets.assign(n + 1, 0);
  for (TermId t : rows.targets) ++out.offsets[t + 1];
  for (std::size_t i = 0; i < n; ++i) out.offsets[i + 1] += out.offsets[i];
  out.targets.resize(rows.targets.size());
  std::vector<std::size_t> cursor(out.offsets.begin(), out.offsets.end() - 1);
  // Visiting sources in ascending order keeps every output row sorted.
  for (TermId v = 0; v < n; ++v) {
    for (TermId a : rows.row(v)) out.targets[cursor[a]++] = v;
  }
  return out;
}

}  // namespace

Reachability compute_reachability(const std::vector<std::vector<TermId>>& parents,
                                  std::span<const TermId> topo_order,
                                  std::size_t block_budget_bytes) {
  const std::size_t n = parents.size();
  const auto& kernels = simd::active_kernels();

  std::vector<std::vector<TermId>> ancestor_lists(n);
  if (n > 0) {
    const std::size_t total_words = (n + 63) / 64;
    const std::size_t budget_words = std::max<std::size_t>(1, block_budget_bytes / (8 * n));
    const std::size_t block_words = std::min(total_words, budget_words);
    const std::size_t block_bits = block_words * 64;
    std::vector<std::uint64_t> rows(n * block_words);

    for (std::size_t first = 0; first < n; first += block_bits) {
      const std::size_t last = std::min(n, first + block_bits);
      std::fill(rows.begin(), rows.end(), 0);
      for (TermId v : topo_order) {
        std::uint64_t* row = rows.data() + static_cast<std::size_t>(v) * block_words;
        for (TermId p : parents[v]) {
          kernels.or_into(row, rows.data() + static_cast<std::size_t>(p) * block_words,
                          block_words);
          if (p >= first && p < last) {
            const std::size_t bit = p - first;
            row[bit / 64] |= std::uint64_t{1} << (bit % 64);
          }
        }
      }
      for (TermId v = 0; v < n; ++v) {
        kernels.append_set_bits(rows.data() + static_cast<std::size_t>(v) * block_words,
                                block_words, static_cast<TermId>(first), ancestor_lists[v]);
      }
    }
  }

  Reachability result;
  result.ancestors = flatten(ancestor_lists);
  result.descendants = transpose(result.ancestors);
  return result;
}

}  // namespace ontoq
