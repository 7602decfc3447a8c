#include "ontoq/service.hpp"

#include <charconv>
#include <stdexcept>

#include <httplib.h>

#include "ontoq/json_codec.hpp"

namespace ontoq {

namespace {

using json::Json;

ApiResponse ok(const Json& body) { return {200, body.dump()}; }

ApiResponse bad_request(const std::string& message) {
  return {400, Json{{"error", message}}.dump()};
}

ApiResponse unknown_term(const std::string& term) {
  return {404, Json{{"error", "unknown term"}, {"term", term}}.dump()};
}

std::optional<std::string> param(const QueryParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

bool bool_param(const QueryParams& params, const std::string& key, bool fallback) {
  const auto value = param(params, key);
  if (!value) return fallback;
  if (*value == "true") return true;
  if (*value == "false") return false;
  throw std::invalid_argument("parameter " + key + " must be true or false");
}

RelationSet relations_param(const QueryParams& params) {
  const auto value = param(params, "relations");
  if (!value) return RelationSet::defaults();
  return RelationSet::parse(*value);
}

}  // namespace

QueryRequest parse_search_params(const QueryParams& params) {
  QueryRequest request;
  const auto term = param(params, "term");
  if (!term || term->empty()) throw std::invalid_argument("missing parameter term");
  request.term = *term;
  request.include_descendants = bool_param(params, "descendants", request.include_descendants);
  request.relations = relations_param(params);
  request.include_composites = bool_param(params, "composites", request.include_composites);
  request.include_ancestor_composites =
      bool_param(params, "ancestor_composites", request.include_ancestor_composites);
  request.include_bridges = bool_param(params, "bridges", request.include_bridges);
  if (const auto type = param(params, "annotation_type")) {
    request.annotation_type_filter = parse_annotation_type(*type);
    if (!request.annotation_type_filter) {
      throw std::invalid_argument("unknown annotation_type '" + *type + "'");
    }
  }
  if (const auto type = param(params, "object_type")) request.object_type_filter = *type;
  return request;
}

ApiResponse ApiRouter::handle(std::string_view path, const QueryParams& params) const {
  try {
    if (path == "/autocomplete") return autocomplete(params);
    if (path == "/search") return search(params);
    if (path == "/stats") return ok(json::stats(corpus_.stats()));
    if (path == "/ontologies") return ok(json::ontologies(corpus_.ontology()));
    if (path.starts_with("/terms/")) {
      std::string_view rest = path.substr(7);
      const std::size_t slash = rest.find('/');
      if (slash == std::string_view::npos) return term(rest);
      const std::string_view direction = rest.substr(slash + 1);
      if (direction == "parents" || direction == "children" || direction == "ancestors" ||
          direction == "descendants") {
        return related(rest.substr(0, slash), direction, params);
      }
    }
    return {404, Json{{"error", "not found"}}.dump()};
  } catch (const UnknownTermError& e) {
    return unknown_term(e.term());
  } catch (const std::invalid_argument& e) {
    return bad_request(e.what());
  }
}

ApiResponse ApiRouter::autocomplete(const QueryParams& params) const {
  const auto q = param(params, "q");
  if (!q) return bad_request("missing parameter q");
  std::size_t limit = 10;
  if (const auto text = param(params, "limit")) {
    const char* end = text->data() + text->size();
    auto [ptr, ec] = std::from_chars(text->data(), end, limit);
    if (ec != std::errc() || ptr != end || limit == 0) {
      return bad_request("limit must be a positive integer");
    }
  }
  const auto ontology = param(params, "ontology");
  if (ontology && !corpus_.ontology().ontologies().contains(*ontology)) {
    return bad_request("unknown ontology '" + *ontology + "'");
  }
  try {
    return ok(json::autocomplete(corpus_.lexical().autocomplete(
        *q, limit, ontology ? std::optional<std::string_view>(*ontology) : std::nullopt)));
  } catch (const EmptyQueryError&) {
    return bad_request("empty query");
  }
}

ApiResponse ApiRouter::term(std::string_view id) const {
  const TermId term = corpus_.ontology().resolve(id);
  const auto& counts = corpus_.annotation_counts(RelationSet::defaults());
  return ok(json::term(corpus_.ontology().term(term), counts[term]));
}

ApiResponse ApiRouter::related(std::string_view id, std::string_view direction,
                               const QueryParams& params) const {
  const OntologyIndex& ontology = corpus_.ontology();
  const TermId term = ontology.resolve(id);
  const RelationSet relations = relations_param(params);
  std::vector<TermId> related;
  if (direction == "ancestors") {
    const auto ids = ontology.ancestor_ids(term, relations);
    related.assign(ids.begin(), ids.end());
  } else if (direction == "descendants") {
    const auto ids = ontology.descendant_ids(term, relations);
    related.assign(ids.begin(), ids.end());
  } else {
    const auto edges = direction == "parents" ? ontology.up_edges(term) : ontology.down_edges(term);
    for (const auto& edge : edges) {
      if (relations.contains(edge.relation) &&
          (related.empty() || related.back() != edge.other)) {
        related.push_back(edge.other);
      }
    }
  }
  return ok(json::related_terms(corpus_, ontology.term(term).id, direction, relations, related));
}

ApiResponse ApiRouter::search(const QueryParams& params) const {
  const QueryRequest request = parse_search_params(params);
  return ok(json::search(corpus_.engine().execute_search(request)));
}

struct Service::Impl {
  explicit Impl(Corpus loaded) : corpus(std::move(loaded)), router(corpus) {}

  Corpus corpus;
  ApiRouter router;
  httplib::Server server;
  int port = 0;
};

Service::Service(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
Service::~Service() = default;

std::unique_ptr<Service> Service::start(const ServiceConfig& config) {
  if (config.port < 1 || config.port > 65535) {
    throw StartupError("port must be in [1, 65535], got " + std::to_string(config.port));
  }
  if (config.obo_files.empty()) throw StartupError("no ontologies");

  std::unique_ptr<Impl> impl;
  try {
    impl = std::make_unique<Impl>(Corpus::load(
        {config.obo_files, config.annotation_file, config.bridge_files, config.lenient}));
  } catch (const std::exception& e) {
    throw StartupError(e.what());
  }

  const Impl* state = impl.get();
  const auto cors = config.cors_allowed_origin;
  impl->server.Get(".*", [state, cors](const httplib::Request& req, httplib::Response& res) {
    QueryParams params(req.params.begin(), req.params.end());
    const ApiResponse response = state->router.handle(req.path, params);
    res.status = response.status;
    if (cors) res.set_header("Access-Control-Allow-Origin", *cors);
    res.set_content(response.body, "application/json; charset=utf-8");
  });

  if (!impl->server.bind_to_port(config.host, config.port)) {
    throw StartupError("cannot bind " + config.host + ":" + std::to_string(config.port));
  }
  impl->port = config.port;
  return std::unique_ptr<Service>(new Service(std::move(impl)));
}

int Service::port() const { return impl_->port; }
const Corpus& Service::corpus() const { return impl_->corpus; }
void Service::listen() { impl_->server.listen_after_bind(); }
void Service::stop() { impl_->server.stop(); }

}  // namespace ontoq
