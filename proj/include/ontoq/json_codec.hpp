#pragma once

// JSON shapes shared by the HTTP service and `ontoq query --format json`.
// Keys are snake_case and follow the field order of the domain types.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ontoq/corpus.hpp"

namespace ontoq::json {

using Json = nlohmann::ordered_json;

Json term(const Term& term, std::size_t annotation_count);
Json autocomplete(const std::vector<AutocompleteMatch>& matches);
Json request(const QueryRequest& request);
Json annotation(const Annotation& annotation);
Json explanation(const MatchExplanation& explanation);
Json search(const QueryResult& result);
Json facets(const FacetMap& facets);
Json stats(const CorpusStats& stats);
Json ontologies(const OntologyIndex& index);
Json related_terms(const Corpus& corpus, std::string_view term, std::string_view direction,
                   RelationSet relations, std::span<const TermId> related);

}  // namespace ontoq::json
