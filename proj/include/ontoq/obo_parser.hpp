#pragma once

// Reader for the OBO 1.2 flat-file subset used by the engine:
//
//   header tags   format-version, ontology
//   stanza tags   id, name, def, synonym, is_a, relationship, is_obsolete
//
// Only [Term] stanzas are read; other stanza kinds are skipped whole and
// unknown tags are ignored. `!` starts a comment unless quoted or escaped.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoq/errors.hpp"
#include "ontoq/relation.hpp"

namespace ontoq {

enum class SynonymScope { exact, broad, narrow, related };

std::string_view scope_name(SynonymScope scope);
std::optional<SynonymScope> parse_scope(std::string_view text);

struct Synonym {
  std::string text;
  SynonymScope scope = SynonymScope::exact;

  bool operator==(const Synonym&) const = default;
};

struct ParsedTerm {
  std::string id;
  std::string name;
  std::optional<std::string> definition;
  std::vector<Synonym> synonyms;
  bool obsolete = false;
  // Stub created for a dangling reference in lenient mode.
  bool synthetic = false;
  std::size_t line = 0;  // line of the [Term] header

  bool operator==(const ParsedTerm& rhs) const {
    return id == rhs.id && name == rhs.name && definition == rhs.definition &&
           synonyms == rhs.synonyms && obsolete == rhs.obsolete && synthetic == rhs.synthetic;
  }
};

struct ParsedOntology {
  std::string source_name;
  std::string ontology_key;
  std::string format_version;
  std::vector<ParsedTerm> terms;   // stanza order
  std::vector<RelationEdge> edges;  // line order
  std::vector<Diagnostic> warnings;

  bool operator==(const ParsedOntology& rhs) const {
    return ontology_key == rhs.ontology_key && format_version == rhs.format_version &&
           terms == rhs.terms && edges == rhs.edges;
  }
};

enum class ResolveMode { strict, lenient };

// True for identifiers of the form PREFIX:LOCALID, e.g. "ZFA:0000001".
bool is_valid_term_id(std::string_view id);

// Throws ParseError pointing at the offending line.
ParsedOntology parse_obo_document(std::string_view source_name, std::string_view text);

// Strict: throws ParseErrors with one entry per edge whose parent is not
// declared in the document. Lenient: appends a synthetic stub term for every
// missing parent and records a warning instead.
ParsedOntology resolve_references(ParsedOntology parsed, ResolveMode mode);

// One tag per line, stanza order preserved; parse_obo_document() of the
// result yields an equal ParsedOntology.
std::string to_canonical_obo(const ParsedOntology& ontology);

}  // namespace ontoq
