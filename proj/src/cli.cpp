#include "ontoq/cli.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "ontoq/corpus.hpp"
#include "ontoq/json_codec.hpp"
#include "ontoq/service.hpp"

namespace ontoq::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDataError = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DataFlags {
  std::vector<std::string> obo;
  std::string annotations;
  std::vector<std::string> bridges;
  bool lenient = false;

  void attach(CLI::App& app) {
    app.add_option("--obo", obo, "OBO ontology file (repeatable)");
    app.add_option("--annotations", annotations, "Annotation TSV file");
    app.add_option("--bridges-file", bridges, "Bridge TSV file (repeatable)");
    app.add_flag("--lenient", lenient, "Materialize dangling references as stub terms");
  }

  CorpusSources sources() const {
    if (obo.empty()) throw UsageError("at least one --obo file is required");
    CorpusSources s;
    s.obo_files.assign(obo.begin(), obo.end());
    if (!annotations.empty()) s.annotation_file = annotations;
    s.bridge_files.assign(bridges.begin(), bridges.end());
    s.lenient = lenient;
    return s;
  }
};

struct QueryFlags {
  std::string term;
  bool no_descendants = false;
  std::string relations = "is_a,part_of";
  bool no_composites = false;
  bool ancestor_composites = false;
  bool bridges = false;
  std::string annotation_type;
  std::string object_type;
  std::string format = "tsv";
};

struct CompleteFlags {
  std::string query;
  std::size_t limit = 10;
  std::string ontology;
};

struct ServeFlags {
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string cors_origin;
};

void print_warnings(const std::vector<Diagnostic>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "WARNING " << w.to_string() << "\n";
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

int run_validate(const std::vector<std::string>& positional, const DataFlags& data,
                 std::ostream& out, std::ostream& err) {
  std::vector<std::string> obo_files = data.obo;
  obo_files.insert(obo_files.end(), positional.begin(), positional.end());
  if (obo_files.empty()) throw UsageError("validate needs at least one OBO file");

  bool ok = true;
  std::vector<ParsedOntology> parsed;
  for (const auto& path : obo_files) {
    try {
      auto document = resolve_references(parse_obo_document(path, read_text_file(path)),
                                         data.lenient ? ResolveMode::lenient : ResolveMode::strict);
      print_warnings(document.warnings, err);
      out << "OK " << document.ontology_key << ": " << document.terms.size() << " terms, "
          << document.edges.size() << " edges\n";
      parsed.push_back(std::move(document));
    } catch (const ParseErrors& e) {
      for (const auto& d : e.diagnostics()) err << "ERROR " << d.to_string() << "\n";
      ok = false;
    } catch (const std::exception& e) {
      err << "ERROR " << e.what() << "\n";
      ok = false;
    }
  }
  if (!ok) return kDataError;

  try {
    const OntologyIndex index = OntologyIndex::build(parsed);
    if (!data.annotations.empty()) {
      const auto load = parse_annotation_file(read_text_file(data.annotations), index,
                                              data.annotations);
      print_warnings(load.warnings, err);
      out << "OK " << data.annotations << ": " << load.annotations.size() << " annotations\n";
    }
    for (const auto& path : data.bridges) {
      const auto links = parse_bridge_file(read_text_file(path), index, path);
      out << "OK " << path << ": " << links.size() << " bridge links\n";
    }
  } catch (const std::exception& e) {
    err << "ERROR " << e.what() << "\n";
    return kDataError;
  }
  return kOk;
}

int run_query(const QueryFlags& flags, const DataFlags& data, std::ostream& out) {
  QueryRequest request;
  request.term = flags.term;
  request.include_descendants = !flags.no_descendants;
  try {
    request.relations = RelationSet::parse(flags.relations);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  request.include_composites = !flags.no_composites;
  request.include_ancestor_composites = flags.ancestor_composites;
  request.include_bridges = flags.bridges;
  if (!flags.annotation_type.empty()) {
    request.annotation_type_filter = parse_annotation_type(flags.annotation_type);
    if (!request.annotation_type_filter) {
      throw UsageError("unknown annotation type '" + flags.annotation_type + "'");
    }
  }
  if (!flags.object_type.empty()) request.object_type_filter = flags.object_type;

  const Corpus corpus = Corpus::load(data.sources());
  const QueryResult result = corpus.engine().execute_search(request);
  if (flags.format == "json") {
    out << json::search(result).dump() << "\n";
    return kOk;
  }
  for (const auto& row : result.annotations) {
    const Annotation& a = row.annotation;
    out << a.object.id << '\t' << a.object.object_type << '\t' << annotation_type_name(a.type)
        << '\t' << a.entity.to_string() << '\t' << path_kind_name(row.explanation.path_kind)
        << '\t' << join(row.explanation.via_terms, ",") << '\n';
  }
  return kOk;
}

int run_complete(const CompleteFlags& flags, const DataFlags& data, std::ostream& out) {
  if (flags.limit == 0) throw UsageError("--limit must be positive");
  const Corpus corpus = Corpus::load(data.sources());
  if (!flags.ontology.empty() && !corpus.ontology().ontologies().contains(flags.ontology)) {
    throw UsageError("unknown ontology '" + flags.ontology + "'");
  }
  std::vector<AutocompleteMatch> matches;
  try {
    matches = corpus.lexical().autocomplete(
        flags.query, flags.limit,
        flags.ontology.empty() ? std::nullopt : std::optional<std::string_view>(flags.ontology));
  } catch (const EmptyQueryError&) {
    throw UsageError("query must not be blank");
  }
  for (const auto& m : matches) out << m.term << '\t' << m.display_name << '\t' << m.tier << '\n';
  return kOk;
}

int run_stats(const DataFlags& data, std::ostream& out) {
  const Corpus corpus = Corpus::load(data.sources());
  const CorpusStats stats = corpus.stats();
  out << "terms\t" << stats.terms << "\n"
      << "ontologies\t" << stats.ontologies << "\n"
      << "annotations\t" << stats.annotations << "\n"
      << "bridges\t" << stats.bridges << "\n";
  return kOk;
}

int run_serve(const ServeFlags& flags, const DataFlags& data, std::ostream& out,
              std::ostream& err) {
  if (flags.port < 1 || flags.port > 65535) {
    throw UsageError("--port must be in [1, 65535], got " + std::to_string(flags.port));
  }
  const CorpusSources sources = data.sources();
  ServiceConfig config;
  config.host = flags.host;
  config.port = flags.port;
  config.obo_files = sources.obo_files;
  config.annotation_file = sources.annotation_file;
  config.bridge_files = sources.bridge_files;
  config.lenient = sources.lenient;
  if (!flags.cors_origin.empty()) config.cors_allowed_origin = flags.cors_origin;
  std::unique_ptr<Service> service;
  try {
    service = Service::start(config);
  } catch (const StartupError& e) {
    err << "ERROR " << e.what() << "\n";
    return kDataError;
  }
  const CorpusStats stats = service->corpus().stats();
  out << "ontoq listening on http://" << config.host << ":" << service->port() << " ("
      << stats.terms << " terms, " << stats.annotations << " annotations)" << std::endl;
  service->listen();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ontology-aware annotation search", "ontoq"};
  app.require_subcommand(1);

  DataFlags validate_data, query_data, complete_data, stats_data, serve_data;
  std::vector<std::string> validate_files;
  QueryFlags query;
  CompleteFlags complete;
  ServeFlags serve;
  if (const char* env_port = std::getenv("ONTOQ_PORT"); env_port != nullptr) {
    try {
      serve.port = std::stoi(env_port);
    } catch (const std::exception&) {
      err << "ONTOQ_PORT is not a number: " << env_port << "\n";
      return kUsageError;
    }
  }

  auto* validate_cmd = app.add_subcommand("validate", "Check that files parse, resolve and are acyclic");
  validate_cmd->add_option("files", validate_files, "OBO files");
  validate_data.attach(*validate_cmd);

  auto* query_cmd = app.add_subcommand("query", "Run an ontology-aware annotation search");
  query_cmd->add_option("--term", query.term, "Query term id")->required();
  query_cmd->add_flag("--no-descendants", query.no_descendants, "Match the term only");
  query_cmd->add_option("--relations", query.relations, "Closure relations, comma separated");
  query_cmd->add_flag("--no-composites", query.no_composites, "Skip post-composed annotations");
  query_cmd->add_flag("--ancestor-composites", query.ancestor_composites,
                      "Add post-composed annotations on ancestors (flagged inferred)");
  query_cmd->add_flag("--bridges", query.bridges, "Follow cross-ontology bridge links");
  query_cmd->add_option("--annotation-type", query.annotation_type,
                        "expression | phenotype | function");
  query_cmd->add_option("--object-type", query.object_type, "Object type filter");
  query_cmd->add_option("--format", query.format, "tsv | json")
      ->check(CLI::IsMember({"tsv", "json"}));
  query_data.attach(*query_cmd);

  auto* complete_cmd = app.add_subcommand("complete", "Ranked term lookup by name or synonym");
  complete_cmd->add_option("query", complete.query, "Text typed so far")->required();
  complete_cmd->add_option("--limit", complete.limit, "Maximum number of matches");
  complete_cmd->add_option("--ontology", complete.ontology, "Restrict to one ontology key");
  complete_data.attach(*complete_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "Print corpus counts");
  stats_data.attach(*stats_cmd);

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP JSON service");
  serve_cmd->add_option("--port", serve.port, "Port (default $ONTOQ_PORT or 8080)");
  serve_cmd->add_option("--host", serve.host, "Bind address");
  serve_cmd->add_option("--cors-origin", serve.cors_origin, "Allowed CORS origin");
  serve_data.attach(*serve_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (*validate_cmd) return run_validate(validate_files, validate_data, out, err);
    if (*query_cmd) return run_query(query, query_data, out);
    if (*complete_cmd) return run_complete(complete, complete_data, out);
    if (*stats_cmd) return run_stats(stats_data, out);
    if (*serve_cmd) return run_serve(serve, serve_data, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseErrors& e) {
    for (const auto& d : e.diagnostics()) err << d.to_string() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}

}  // namespace ontoq::cli
