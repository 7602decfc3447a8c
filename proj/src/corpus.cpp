#include "ontoq/corpus.hpp"

#include <array>
#include <fstream>
#include <mutex>
#include <sstream>

namespace ontoq {

struct Corpus::CountCache {
  std::array<std::once_flag, RelationSet::kMaskCount> once;
  std::array<std::vector<std::size_t>, RelationSet::kMaskCount> counts;
};

Corpus::Corpus() : counts_(std::make_unique<CountCache>()) {}
Corpus::Corpus(Corpus&&) noexcept = default;
Corpus& Corpus::operator=(Corpus&&) noexcept = default;
Corpus::~Corpus() = default;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Corpus Corpus::load(const CorpusSources& sources) {
  std::vector<SourceText> obo;
  for (const auto& path : sources.obo_files) obo.push_back({path.string(), read_text_file(path)});
  std::optional<SourceText> annotations;
  if (sources.annotation_file) {
    annotations = SourceText{sources.annotation_file->string(),
                             read_text_file(*sources.annotation_file)};
  }
  std::vector<SourceText> bridges;
  for (const auto& path : sources.bridge_files) {
    bridges.push_back({path.string(), read_text_file(path)});
  }
  return from_texts(obo, annotations, bridges, sources.lenient);
}

Corpus Corpus::from_texts(const std::vector<SourceText>& obo,
                          const std::optional<SourceText>& annotations,
                          const std::vector<SourceText>& bridges, bool lenient) {
  Corpus corpus;
  std::vector<ParsedOntology> parsed;
  parsed.reserve(obo.size());
  for (const auto& source : obo) {
    auto document = resolve_references(parse_obo_document(source.name, source.text),
                                       lenient ? ResolveMode::lenient : ResolveMode::strict);
    corpus.documents_.push_back(
        {source.name, document.ontology_key, document.terms.size(), document.edges.size()});
    corpus.warnings_.insert(corpus.warnings_.end(), document.warnings.begin(),
                            document.warnings.end());
    parsed.push_back(std::move(document));
  }
  corpus.ontology_ = OntologyIndex::build(parsed);

  if (annotations) {
    auto load = parse_annotation_file(annotations->text, corpus.ontology_, annotations->name);
    corpus.warnings_.insert(corpus.warnings_.end(), load.warnings.begin(), load.warnings.end());
    corpus.annotations_ = AnnotationIndex::build(std::move(load.annotations));
  }

  std::vector<BridgeLink> links;
  for (const auto& source : bridges) {
    auto more = parse_bridge_file(source.text, corpus.ontology_, source.name);
    links.insert(links.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
  }
  corpus.bridges_ = BridgeIndex::build(std::move(links));
  corpus.lexical_ = LexicalIndex::build(corpus.ontology_);
  return corpus;
}

CorpusStats Corpus::stats() const {
  return {ontology_.term_count(), ontology_.ontologies().size(), annotations_.size(),
          bridges_.size()};
}

const std::vector<std::size_t>& Corpus::annotation_counts(RelationSet relations) const {
  if (relations.empty()) throw std::invalid_argument("relation set must not be empty");
  const unsigned slot = relations.mask();
  std::call_once(counts_->once[slot],
                 [&] { counts_->counts[slot] = engine().annotation_counts(relations); });
  return counts_->counts[slot];
}

}  // namespace ontoq
