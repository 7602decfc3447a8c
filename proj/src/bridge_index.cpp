#include "ontoq/bridge_index.hpp"

#include <set>
#include <tuple>

#include "ontoq/errors.hpp"
#include "text_util.hpp"

namespace ontoq {

std::vector<BridgeLink> parse_bridge_file(std::string_view text, const OntologyIndex& index,
                                          std::string_view source_name) {
  const std::string source(source_name);
  std::vector<BridgeLink> links;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (line.starts_with('#') || detail::trim(line).empty()) continue;
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError(source, line_no,
                       "expected 3 tab-separated columns, found " + std::to_string(fields.size()));
    }
    BridgeLink link;
    link.source = std::string(detail::trim(fields[0]));
    if (auto relation = detail::trim(fields[1]); !relation.empty()) link.relation = relation;
    link.target = std::string(detail::trim(fields[2]));
    link.line = line_no;

    const auto source_id = index.find(link.source);
    if (!source_id) throw ParseError(source, line_no, "unknown term " + link.source);
    const auto target_id = index.find(link.target);
    if (!target_id) throw ParseError(source, line_no, "unknown term " + link.target);
    if (index.term(*source_id).ontology_key == index.term(*target_id).ontology_key) {
      throw ParseError(source, line_no,
                       "same ontology: " + link.source + " and " + link.target + " are both in " +
                           index.term(*source_id).ontology_key);
    }
    links.push_back(std::move(link));
  }
  return links;
}

BridgeIndex BridgeIndex::build(std::vector<BridgeLink> links) {
  BridgeIndex index;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (auto& link : links) {
    if (!seen.emplace(link.source, link.relation, link.target).second) continue;
    index.by_target_[link.target].insert(link.source);
    index.by_source_[link.source].insert(link.target);
    index.links_.push_back(std::move(link));
  }
  return index;
}

const TermIdSet& BridgeIndex::sources_for_target(std::string_view target) const {
  static const TermIdSet empty;
  auto it = by_target_.find(target);
  return it == by_target_.end() ? empty : it->second;
}

const TermIdSet& BridgeIndex::targets_for_source(std::string_view source) const {
  static const TermIdSet empty;
  auto it = by_source_.find(source);
  return it == by_source_.end() ? empty : it->second;
}

TermIdSet BridgeIndex::bridged_sources(const TermIdSet& entity_terms) const {
  TermIdSet out;
  if (entity_terms.size() < by_target_.size()) {
    for (const auto& term : entity_terms) {
      const auto& sources = sources_for_target(term);
      out.insert(sources.begin(), sources.end());
    }
  } else {
    for (const auto& [target, sources] : by_target_) {
      if (entity_terms.contains(target)) out.insert(sources.begin(), sources.end());
    }
  }
  return out;
}

}  // namespace ontoq
