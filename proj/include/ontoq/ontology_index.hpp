#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontoq/obo_parser.hpp"
#include "ontoq/reachability.hpp"
#include "ontoq/relation.hpp"

namespace ontoq {

using TermIdSet = std::set<std::string>;

struct Term {
  std::string id;
  std::string name;
  std::optional<std::string> definition;
  std::vector<Synonym> synonyms;
  std::string ontology_key;
  bool obsolete = false;
  bool synthetic = false;
};

struct TermEdge {
  TermId other;  // parent for up edges, child for down edges
  Relation relation;
  std::string label;
};

struct OntologyInfo {
  std::string key;
  std::string format_version;
  std::vector<std::string> sources;
  std::vector<TermId> terms;  // ascending
};

// Immutable merged view over one or more parsed ontologies.
//
// Terms are numbered in ascending id order, so every TermId-sorted range is
// also sorted by id string. The {is_a, part_of} closure is computed by
// build(); other relation sets are computed once on first use and cached.
// All const members are safe to call from any number of threads.
class OntologyIndex {
 public:
  OntologyIndex();
  ~OntologyIndex();
  OntologyIndex(OntologyIndex&&) noexcept;
  OntologyIndex& operator=(OntologyIndex&&) noexcept;

  // Throws CycleError when the is_a/part_of/develops_from edges contain a
  // cycle, DuplicateTermError when two documents declare the same id, and
  // ParseError for an edge whose parent is not declared in its own document.
  static OntologyIndex build(std::span<const ParsedOntology> parsed);

  std::size_t term_count() const { return terms_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::map<std::string, OntologyInfo>& ontologies() const { return ontologies_; }

  std::optional<TermId> find(std::string_view id) const;
  // Throws UnknownTermError.
  TermId resolve(std::string_view id) const;
  const Term& term(TermId id) const { return terms_[id]; }
  const Term& term_info(std::string_view id) const { return terms_[resolve(id)]; }

  // Raw edges including `other` labels, sorted by (other, relation, label).
  std::span<const TermEdge> up_edges(TermId id) const { return up_edges_[id]; }
  std::span<const TermEdge> down_edges(TermId id) const { return down_edges_[id]; }
  bool has_edge(TermId child, TermId parent, RelationSet relations) const;

  // Closure over `relations`; throws std::invalid_argument for an empty set.
  const Reachability& closure(RelationSet relations) const;
  std::span<const TermId> descendant_ids(TermId id, RelationSet relations) const {
    return closure(relations).descendants.row(id);
  }
  std::span<const TermId> ancestor_ids(TermId id, RelationSet relations) const {
    return closure(relations).ancestors.row(id);
  }

  // Id-level queries. The term itself is never part of the result.
  TermIdSet descendants(std::string_view id, RelationSet relations = RelationSet::defaults()) const;
  TermIdSet ancestors(std::string_view id, RelationSet relations = RelationSet::defaults()) const;
  TermIdSet children(std::string_view id, RelationSet relations = RelationSet::defaults()) const;
  TermIdSet parents(std::string_view id, RelationSet relations = RelationSet::defaults()) const;

  TermIdSet to_id_set(std::span<const TermId> ids) const;

 private:
  struct ClosureCache;

  std::vector<Term> terms_;
  std::vector<std::vector<TermEdge>> up_edges_;
  std::vector<std::vector<TermEdge>> down_edges_;
  std::vector<TermId> topo_order_;
  std::map<std::string, OntologyInfo> ontologies_;
  std::size_t edge_count_ = 0;
  std::unique_ptr<ClosureCache> cache_;
};

}  // namespace ontoq
