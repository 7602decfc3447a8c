#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoq/annotation_store.hpp"
#include "ontoq/bridge_index.hpp"
#include "ontoq/ontology_index.hpp"

namespace ontoq {

struct QueryRequest {
  std::string term;
  bool include_descendants = true;
  RelationSet relations = RelationSet::defaults();
  bool include_composites = true;
  bool include_ancestor_composites = false;
  bool include_bridges = false;
  std::optional<AnnotationType> annotation_type_filter;
  std::optional<std::string> object_type_filter;
};

// Declaration order is the priority order used when several routes apply.
enum class PathKind { direct, descendant, composite_component, bridged, ancestor_composite };

std::string_view path_kind_name(PathKind kind);

// via_terms is a chain that starts at the annotated term (or the matching
// component) and ends at the query term. Each step is one of:
//   * a child -> parent edge in the request's relation set,
//   * an is_a edge on the bridged side, followed by one bridge link
//     source -> target,
//   * for ancestor_composite, a parent -> child edge walking down to the
//     query term.
struct MatchExplanation {
  PathKind path_kind = PathKind::direct;
  std::vector<std::string> via_terms;

  bool inferred() const { return path_kind == PathKind::ancestor_composite; }
  bool operator==(const MatchExplanation&) const = default;
};

struct ResultRow {
  AnnotationRef ref = 0;
  Annotation annotation;
  MatchExplanation explanation;
};

// facet name -> facet value -> count; zero counts are omitted.
using FacetMap = std::map<std::string, std::map<std::string, std::size_t>>;

struct QueryExpansion {
  TermIdSet home_set;     // query term plus its descendants
  TermIdSet bridged_set;  // bridge sources plus their is_a descendants
};

struct QueryResult {
  QueryRequest request;
  TermIdSet matched_terms;
  std::vector<ResultRow> annotations;  // ordered by object, type, entity
  FacetMap facets;
};

FacetMap compute_facets(const std::vector<ResultRow>& rows);

// Stateless search over immutable indices; cheap to construct and safe to
// share between threads.
class QueryEngine {
 public:
  QueryEngine(const OntologyIndex& ontology, const AnnotationIndex& annotations,
              const BridgeIndex& bridges)
      : ontology_(ontology), annotations_(annotations), bridges_(bridges) {}

  // Throws UnknownTermError, or std::invalid_argument for an empty relation set.
  QueryExpansion expand_query_terms(const QueryRequest& request) const;
  QueryResult execute_search(const QueryRequest& request) const;

  // Per term: size of execute_search(term; descendants and composites on,
  // bridges off) under `relations`. Indexed by TermId.
  std::vector<std::size_t> annotation_counts(RelationSet relations) const;
  std::map<std::string, std::size_t> annotation_counts_per_term(RelationSet relations) const;

 private:
  std::vector<std::string> upward_path(TermId from, TermId to, RelationSet relations) const;
  std::vector<std::string> bridged_path(TermId from, TermId query, const TermIdSet& home,
                                        RelationSet relations) const;

  const OntologyIndex& ontology_;
  const AnnotationIndex& annotations_;
  const BridgeIndex& bridges_;
};

}  // namespace ontoq
