#include "ontoq/query_engine.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace ontoq {

std::string_view path_kind_name(PathKind kind) {
  switch (kind) {
    case PathKind::direct: return "direct";
    case PathKind::descendant: return "descendant";
    case PathKind::composite_component: return "composite_component";
    case PathKind::bridged: return "bridged";
    case PathKind::ancestor_composite: return "ancestor_composite";
  }
  return "direct";
}

FacetMap compute_facets(const std::vector<ResultRow>& rows) {
  FacetMap facets;
  for (const auto& row : rows) {
    ++facets["annotation_type"][std::string(annotation_type_name(row.annotation.type))];
    ++facets["object_type"][row.annotation.object.object_type];
  }
  return facets;
}

namespace {

// Breadth-first search over up edges accepted by `follow`, visiting parents
// in ascending TermId order. Returns the chain from `from` to the first node
// satisfying `stop`, or an empty vector.
template <typename Follow, typename Stop>
std::vector<TermId> search_up(const OntologyIndex& ontology, TermId from, Follow follow,
                              Stop stop) {
  std::unordered_map<TermId, TermId> came_from{{from, from}};
  std::deque<TermId> queue{from};
  while (!queue.empty()) {
    const TermId current = queue.front();
    queue.pop_front();
    if (stop(current)) {
      std::vector<TermId> chain{current};
      for (TermId v = current; v != from;) {
        v = came_from.at(v);
        chain.push_back(v);
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    for (const auto& edge : ontology.up_edges(current)) {
      if (follow(edge.relation) && came_from.try_emplace(edge.other, current).second) {
        queue.push_back(edge.other);
      }
    }
  }
  return {};
}

}  // namespace

QueryExpansion QueryEngine::expand_query_terms(const QueryRequest& request) const {
  if (request.relations.empty()) throw std::invalid_argument("relation set must not be empty");
  const TermId query = ontology_.resolve(request.term);

  QueryExpansion expansion;
  if (request.include_descendants) {
    expansion.home_set = ontology_.to_id_set(ontology_.descendant_ids(query, request.relations));
  }
  expansion.home_set.insert(request.term);

  if (request.include_bridges) {
    const RelationSet is_a{Relation::is_a};
    for (const auto& source : bridges_.bridged_sources(expansion.home_set)) {
      expansion.bridged_set.insert(source);
      const auto below = ontology_.descendant_ids(ontology_.resolve(source), is_a);
      for (TermId t : below) expansion.bridged_set.insert(ontology_.term(t).id);
    }
  }
  return expansion;
}

std::vector<std::string> QueryEngine::upward_path(TermId from, TermId to,
                                                  RelationSet relations) const {
  const auto chain = search_up(
      ontology_, from, [&](Relation r) { return relations.contains(r); },
      [&](TermId v) { return v == to; });
  std::vector<std::string> ids;
  for (TermId v : chain) ids.push_back(ontology_.term(v).id);
  return ids;
}

std::vector<std::string> QueryEngine::bridged_path(TermId from, TermId query,
                                                   const TermIdSet& home,
                                                   RelationSet relations) const {
  auto linked_target = [&](TermId v) -> const std::string* {
    for (const auto& target : bridges_.targets_for_source(ontology_.term(v).id)) {
      if (home.contains(target)) return &target;
    }
    return nullptr;
  };
  const auto chain = search_up(
      ontology_, from, [](Relation r) { return r == Relation::is_a; },
      [&](TermId v) { return linked_target(v) != nullptr; });
  std::vector<std::string> ids;
  if (chain.empty()) return ids;
  for (TermId v : chain) ids.push_back(ontology_.term(v).id);
  const auto rest = upward_path(ontology_.resolve(*linked_target(chain.back())), query, relations);
  ids.insert(ids.end(), rest.begin(), rest.end());
  return ids;
}

QueryResult QueryEngine::execute_search(const QueryRequest& request) const {
  const QueryExpansion expansion = expand_query_terms(request);
  const TermId query = ontology_.resolve(request.term);

  QueryResult result;
  result.request = request;
  result.matched_terms = expansion.home_set;
  result.matched_terms.insert(expansion.bridged_set.begin(), expansion.bridged_set.end());

  // 0: the query term, 1: a descendant, 2: reached through a bridge
  auto route_rank = [&](const std::string& term) -> int {
    if (term == request.term) return 0;
    if (expansion.home_set.contains(term)) return 1;
    if (expansion.bridged_set.contains(term)) return 2;
    return -1;
  };
  auto route_path = [&](const std::string& term, int rank) -> std::vector<std::string> {
    const TermId id = ontology_.resolve(term);
    if (rank == 0) return {term};
    if (rank == 1) return upward_path(id, query, request.relations);
    return bridged_path(id, query, expansion.home_set, request.relations);
  };

  std::unordered_map<AnnotationRef, MatchExplanation> matched;
  const MatchMode mode =
      request.include_composites ? MatchMode::with_composites : MatchMode::simple_only;
  for (AnnotationRef ref : annotations_.annotations_for_terms(result.matched_terms, mode)) {
    const AnnotatedEntity& entity = annotations_.at(ref).entity;
    MatchExplanation explanation;
    if (!entity.is_post_composed()) {
      const int rank = route_rank(entity.primary);
      explanation.path_kind = rank == 0   ? PathKind::direct
                              : rank == 1 ? PathKind::descendant
                                          : PathKind::bridged;
      explanation.via_terms = route_path(entity.primary, rank);
    } else {
      const std::string* component = &entity.primary;
      int rank = route_rank(entity.primary);
      if (const int second = route_rank(*entity.secondary);
          second >= 0 && (rank < 0 || second < rank)) {
        component = &*entity.secondary;
        rank = second;
      }
      explanation.path_kind = PathKind::composite_component;
      explanation.via_terms = route_path(*component, rank);
    }
    matched.emplace(ref, std::move(explanation));
  }

  if (request.include_ancestor_composites) {
    const auto above = ontology_.ancestor_ids(query, request.relations);
    std::vector<AnnotationRef> candidates;
    for (TermId ancestor : above) {
      for (AnnotationRef ref : annotations_.by_term(ontology_.term(ancestor).id)) {
        if (annotations_.at(ref).entity.is_post_composed() && !matched.contains(ref)) {
          candidates.push_back(ref);
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (AnnotationRef ref : candidates) {
      const AnnotatedEntity& entity = annotations_.at(ref).entity;
      for (std::string_view component : entity.components()) {
        const auto id = ontology_.find(component);
        if (!id || !std::binary_search(above.begin(), above.end(), *id)) continue;
        MatchExplanation explanation;
        explanation.path_kind = PathKind::ancestor_composite;
        explanation.via_terms = upward_path(query, *id, request.relations);
        std::reverse(explanation.via_terms.begin(), explanation.via_terms.end());
        matched.emplace(ref, std::move(explanation));
        break;
      }
    }
  }

  for (auto& [ref, explanation] : matched) {
    const Annotation& a = annotations_.at(ref);
    if (request.annotation_type_filter && a.type != *request.annotation_type_filter) continue;
    if (request.object_type_filter && a.object.object_type != *request.object_type_filter) continue;
    result.annotations.push_back({ref, a, std::move(explanation)});
  }
  std::sort(result.annotations.begin(), result.annotations.end(),
            [](const ResultRow& x, const ResultRow& y) {
              const Annotation& a = x.annotation;
              const Annotation& b = y.annotation;
              const std::string_view a_type = annotation_type_name(a.type);
              const std::string_view b_type = annotation_type_name(b.type);
              const std::string_view a_second = a.entity.secondary ? *a.entity.secondary : "";
              const std::string_view b_second = b.entity.secondary ? *b.entity.secondary : "";
              return std::tie(a.object.id, a_type, a.entity.primary, a_second, x.ref) <
                     std::tie(b.object.id, b_type, b.entity.primary, b_second, y.ref);
            });
  result.facets = compute_facets(result.annotations);
  return result;
}

std::vector<std::size_t> QueryEngine::annotation_counts(RelationSet relations) const {
  std::vector<std::size_t> counts(ontology_.term_count(), 0);
  std::vector<TermId> hits;
  for (const auto& annotation : annotations_.all()) {
    hits.clear();
    for (std::string_view component : annotation.entity.components()) {
      const auto id = ontology_.find(component);
      if (!id) continue;
      hits.push_back(*id);
      const auto above = ontology_.ancestor_ids(*id, relations);
      hits.insert(hits.end(), above.begin(), above.end());
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    for (TermId t : hits) ++counts[t];
  }
  return counts;
}

std::map<std::string, std::size_t> QueryEngine::annotation_counts_per_term(
    RelationSet relations) const {
  const auto counts = annotation_counts(relations);
  std::map<std::string, std::size_t> out;
  for (TermId t = 0; t < counts.size(); ++t) out.emplace_hint(out.end(), ontology_.term(t).id, counts[t]);
  return out;
}

}  // namespace ontoq
