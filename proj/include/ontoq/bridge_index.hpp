#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ontoq/ontology_index.hpp"

namespace ontoq {

inline constexpr std::string_view kDefaultBridgeRelation = "process_of";

// Explicit cross-ontology link: source (process side) -relation-> target
// (entity side). Links are id-based; term names never take part.
struct BridgeLink {
  std::string source;
  std::string relation{kDefaultBridgeRelation};
  std::string target;
  std::size_t line = 0;

  bool operator==(const BridgeLink& rhs) const {
    return source == rhs.source && relation == rhs.relation && target == rhs.target;
  }
};

// Three tab-separated columns: source_term_id, relation, target_term_id. An
// empty relation column means "process_of". Throws ParseError for unknown
// ids, links inside one ontology, and malformed rows.
std::vector<BridgeLink> parse_bridge_file(std::string_view text, const OntologyIndex& index,
                                          std::string_view source_name = "bridges");

class BridgeIndex {
 public:
  // Duplicate links collapse to one.
  static BridgeIndex build(std::vector<BridgeLink> links);

  std::size_t size() const { return links_.size(); }
  const std::vector<BridgeLink>& links() const { return links_; }

  const TermIdSet& sources_for_target(std::string_view target) const;
  const TermIdSet& targets_for_source(std::string_view source) const;

  // Every source whose link target is in entity_terms. One hop, no closure.
  TermIdSet bridged_sources(const TermIdSet& entity_terms) const;

 private:
  std::vector<BridgeLink> links_;
  std::map<std::string, TermIdSet, std::less<>> by_target_;
  std::map<std::string, TermIdSet, std::less<>> by_source_;
};

}  // namespace ontoq
