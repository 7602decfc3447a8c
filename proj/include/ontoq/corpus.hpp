#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ontoq/annotation_store.hpp"
#include "ontoq/bridge_index.hpp"
#include "ontoq/errors.hpp"
#include "ontoq/lexical_index.hpp"
#include "ontoq/ontology_index.hpp"
#include "ontoq/query_engine.hpp"

namespace ontoq {

struct SourceText {
  std::string name;
  std::string text;
};

struct CorpusSources {
  std::vector<std::filesystem::path> obo_files;
  std::optional<std::filesystem::path> annotation_file;
  std::vector<std::filesystem::path> bridge_files;
  bool lenient = false;
};

struct CorpusStats {
  std::size_t terms = 0;
  std::size_t ontologies = 0;
  std::size_t annotations = 0;
  std::size_t bridges = 0;
};

struct DocumentSummary {
  std::string source;
  std::string ontology_key;
  std::size_t terms = 0;
  std::size_t edges = 0;
};

// Throws IoError.
std::string read_text_file(const std::filesystem::path& path);

// Everything a search needs, built once and read-only afterwards.
class Corpus {
 public:
  // Parse, resolve, index. Propagates ParseError, ParseErrors, CycleError,
  // DuplicateTermError and IoError from the individual stages.
  static Corpus load(const CorpusSources& sources);
  static Corpus from_texts(const std::vector<SourceText>& obo,
                           const std::optional<SourceText>& annotations,
                           const std::vector<SourceText>& bridges, bool lenient = false);

  Corpus(Corpus&&) noexcept;
  Corpus& operator=(Corpus&&) noexcept;
  ~Corpus();

  const OntologyIndex& ontology() const { return ontology_; }
  const AnnotationIndex& annotations() const { return annotations_; }
  const BridgeIndex& bridges() const { return bridges_; }
  const LexicalIndex& lexical() const { return lexical_; }
  QueryEngine engine() const { return QueryEngine(ontology_, annotations_, bridges_); }

  const std::vector<DocumentSummary>& documents() const { return documents_; }
  const std::vector<Diagnostic>& warnings() const { return warnings_; }
  CorpusStats stats() const;

  // Cached per relation set; indexed by TermId.
  const std::vector<std::size_t>& annotation_counts(RelationSet relations) const;

 private:
  Corpus();

  struct CountCache;

  OntologyIndex ontology_;
  AnnotationIndex annotations_;
  BridgeIndex bridges_;
  LexicalIndex lexical_;
  std::vector<DocumentSummary> documents_;
  std::vector<Diagnostic> warnings_;
  std::unique_ptr<CountCache> counts_;
};

}  // namespace ontoq
