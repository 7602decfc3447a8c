#include "ontoq/json_codec.hpp"

namespace ontoq::json {

namespace {

Json optional_string(const std::optional<std::string>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json relation_names(RelationSet relations) {
  Json names = Json::array();
  for (const auto& name : relations.names()) names.push_back(name);
  return names;
}

}  // namespace

Json term(const Term& term, std::size_t annotation_count) {
  Json synonyms = Json::array();
  for (const auto& synonym : term.synonyms) {
    synonyms.push_back({{"text", synonym.text}, {"scope", scope_name(synonym.scope)}});
  }
  return {{"id", term.id},
          {"name", term.name},
          {"definition", optional_string(term.definition)},
          {"synonyms", std::move(synonyms)},
          {"ontology_key", term.ontology_key},
          {"obsolete", term.obsolete},
          {"synthetic", term.synthetic},
          {"annotation_count", annotation_count}};
}

Json autocomplete(const std::vector<AutocompleteMatch>& matches) {
  Json out = Json::array();
  for (const auto& m : matches) {
    out.push_back({{"term", m.term},
                   {"display_name", m.display_name},
                   {"matched_text", m.matched_text},
                   {"matched_kind", match_kind_name(m.matched_kind)},
                   {"tier", m.tier}});
  }
  return out;
}

Json request(const QueryRequest& request) {
  return {{"term", request.term},
          {"include_descendants", request.include_descendants},
          {"relations", relation_names(request.relations)},
          {"include_composites", request.include_composites},
          {"include_ancestor_composites", request.include_ancestor_composites},
          {"include_bridges", request.include_bridges},
          {"annotation_type_filter", request.annotation_type_filter
                                         ? Json(annotation_type_name(*request.annotation_type_filter))
                                         : Json(nullptr)},
          {"object_type_filter", optional_string(request.object_type_filter)}};
}

Json annotation(const Annotation& annotation) {
  return {{"object", {{"id", annotation.object.id}, {"object_type", annotation.object.object_type}}},
          {"entity",
           {{"kind", annotation.entity.is_post_composed() ? "post_composed" : "simple"},
            {"primary", annotation.entity.primary},
            {"secondary", optional_string(annotation.entity.secondary)}}},
          {"annotation_type", annotation_type_name(annotation.type)},
          {"source_line", annotation.source_line}};
}

Json explanation(const MatchExplanation& explanation) {
  return {{"path_kind", path_kind_name(explanation.path_kind)},
          {"via_terms", explanation.via_terms},
          {"inferred", explanation.inferred()}};
}

Json facets(const FacetMap& facets) {
  Json out = Json::object();
  for (const char* name : {"annotation_type", "object_type"}) {
    Json counts = Json::object();
    if (auto it = facets.find(name); it != facets.end()) {
      for (const auto& [value, count] : it->second) counts[value] = count;
    }
    out[name] = std::move(counts);
  }
  return out;
}

Json search(const QueryResult& result) {
  Json rows = Json::array();
  for (const auto& row : result.annotations) {
    rows.push_back(
        {{"annotation", annotation(row.annotation)}, {"explanation", explanation(row.explanation)}});
  }
  return {{"request", request(result.request)},
          {"matched_terms", result.matched_terms},
          {"annotations", std::move(rows)},
          {"facets", facets(result.facets)}};
}

Json stats(const CorpusStats& stats) {
  return {{"terms", stats.terms},
          {"ontologies", stats.ontologies},
          {"annotations", stats.annotations},
          {"bridges", stats.bridges}};
}

Json ontologies(const OntologyIndex& index) {
  Json out = Json::array();
  for (const auto& [key, info] : index.ontologies()) {
    out.push_back({{"ontology_key", key},
                   {"format_version", info.format_version},
                   {"sources", info.sources},
                   {"terms", info.terms.size()}});
  }
  return out;
}

Json related_terms(const Corpus& corpus, std::string_view term, std::string_view direction,
                   RelationSet relations, std::span<const TermId> related) {
  const auto& counts = corpus.annotation_counts(RelationSet::defaults());
  Json terms = Json::array();
  for (TermId id : related) {
    const Term& t = corpus.ontology().term(id);
    terms.push_back({{"id", t.id}, {"name", t.name}, {"annotation_count", counts[id]}});
  }
  return {{"term", term},
          {"direction", direction},
          {"relations", relation_names(relations)},
          {"terms", std::move(terms)}};
}

}  // namespace ontoq::json
