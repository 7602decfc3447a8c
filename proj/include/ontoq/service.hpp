#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoq/corpus.hpp"

namespace ontoq {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::vector<std::filesystem::path> obo_files;
  std::optional<std::filesystem::path> annotation_file;
  std::vector<std::filesystem::path> bridge_files;
  bool lenient = false;
  std::optional<std::string> cors_allowed_origin;
};

using QueryParams = std::multimap<std::string, std::string>;

struct ApiResponse {
  int status = 200;
  std::string body;
};

// Maps GET requests onto the corpus. Independent of any HTTP library so the
// endpoint contracts can be tested directly.
//
//   /autocomplete?q&limit&ontology
//   /terms/{id}
//   /terms/{id}/parents|children|ancestors|descendants?relations
//   /search?term&descendants&relations&composites&ancestor_composites
//          &bridges&annotation_type&object_type
//   /ontologies
//   /stats
class ApiRouter {
 public:
  explicit ApiRouter(const Corpus& corpus) : corpus_(corpus) {}

  ApiResponse handle(std::string_view path, const QueryParams& params) const;

 private:
  ApiResponse autocomplete(const QueryParams& params) const;
  ApiResponse term(std::string_view id) const;
  ApiResponse related(std::string_view id, std::string_view direction,
                      const QueryParams& params) const;
  ApiResponse search(const QueryParams& params) const;

  const Corpus& corpus_;
};

// Parses the /search parameter set into a request; throws
// std::invalid_argument with a client-facing message on bad values.
QueryRequest parse_search_params(const QueryParams& params);

class Service {
 public:
  // Loads every file and binds the port. Throws StartupError wrapping the
  // underlying diagnostic on any failure.
  static std::unique_ptr<Service> start(const ServiceConfig& config);

  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  int port() const;
  const Corpus& corpus() const;

  // Serves until stop() is called from another thread.
  void listen();
  void stop();

 private:
  struct Impl;
  explicit Service(std::unique_ptr<Impl> impl);

  std::unique_ptr<Impl> impl_;
};

}  // namespace ontoq
