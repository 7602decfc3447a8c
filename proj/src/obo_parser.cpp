#include "ontoq/obo_parser.hpp"

#include <filesystem>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "text_util.hpp"

namespace ontoq {

namespace {

using detail::is_space;
using detail::trim;

struct QuotedText {
  std::string text;
  std::string_view rest;
};

// Reads a double-quoted, backslash-escaped string at the start of `value`.
std::optional<QuotedText> read_quoted(std::string_view value) {
  if (value.empty() || value.front() != '"') return std::nullopt;
  std::string text;
  for (std::size_t i = 1; i < value.size(); ++i) {
    const char c = value[i];
    if (c == '\\' && i + 1 < value.size()) {
      text += detail::unescape_char(value[++i]);
    } else if (c == '"') {
      return QuotedText{std::move(text), value.substr(i + 1)};
    } else {
      text += c;
    }
  }
  return std::nullopt;
}

std::string unescape(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i] == '\\' && i + 1 < value.size()) {
      out += detail::unescape_char(value[++i]);
    } else {
      out += value[i];
    }
  }
  return out;
}

// Removes an unquoted, unescaped `!` comment and surrounding whitespace.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '\\') {
      ++i;
    } else if (c == '"') {
      quoted = !quoted;
    } else if (c == '!' && !quoted) {
      line = line.substr(0, i);
      break;
    }
  }
  return trim(line);
}

std::string_view first_token(std::string_view text) {
  std::size_t end = 0;
  while (end < text.size() && !is_space(text[end])) ++end;
  return text.substr(0, end);
}

std::string default_key(std::string_view source_name) {
  std::string stem = std::filesystem::path(std::string(source_name)).stem().string();
  if (!stem.empty()) return stem;
  if (!source_name.empty()) return std::string(source_name);
  return "unnamed";
}

class DocumentParser {
 public:
  DocumentParser(std::string_view source, std::string_view text) : source_(source), text_(text) {
    result_.source_name = std::string(source);
  }

  ParsedOntology run() {
    std::size_t line_no = 0;
    for (std::string_view raw : detail::split_lines(text_)) {
      ++line_no;
      const std::string_view line = strip_comment(raw);
      if (line.empty()) continue;
      if (line.front() == '[' && line.back() == ']') {
        finish_stanza();
        if (line == "[Term]") {
          section_ = Section::term;
          pending_ = Pending{};
          pending_.term.line = line_no;
        } else {
          section_ = Section::skipped;
        }
        continue;
      }
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) continue;
      const std::string_view tag = trim(line.substr(0, colon));
      const std::string_view value = trim(line.substr(colon + 1));
      switch (section_) {
        case Section::header: header_tag(tag, value); break;
        case Section::term: term_tag(line_no, tag, value); break;
        case Section::skipped: break;
      }
    }
    finish_stanza();
    if (result_.ontology_key.empty()) result_.ontology_key = default_key(source_);
    return std::move(result_);
  }

 private:
  enum class Section { header, term, skipped };

  struct Pending {
    ParsedTerm term;
    bool has_id = false;
    bool has_name = false;
    std::vector<RelationEdge> edges;
  };

  [[noreturn]] void fail(std::size_t line, std::string message) const {
    throw ParseError(std::string(source_), line, std::move(message));
  }

  void header_tag(std::string_view tag, std::string_view value) {
    if (tag == "format-version") {
      result_.format_version = std::string(value);
    } else if (tag == "ontology") {
      result_.ontology_key = std::string(value);
    }
  }

  void term_tag(std::size_t line, std::string_view tag, std::string_view value) {
    ParsedTerm& term = pending_.term;
    if (tag == "id") {
      if (pending_.has_id) fail(line, "stanza has more than one id: tag");
      if (!is_valid_term_id(value)) fail(line, "invalid term id '" + std::string(value) + "'");
      if (auto [it, inserted] = seen_ids_.emplace(std::string(value), line); !inserted) {
        fail(line, "duplicate id " + std::string(value) + " (first declared on line " +
                       std::to_string(it->second) + ")");
      }
      term.id = std::string(value);
      pending_.has_id = true;
    } else if (tag == "name") {
      if (pending_.has_name) fail(line, "stanza has more than one name: tag");
      term.name = unescape(value);
      pending_.has_name = true;
    } else if (tag == "def") {
      if (auto quoted = read_quoted(value)) {
        term.definition = std::move(quoted->text);
      } else {
        term.definition = unescape(value);
      }
    } else if (tag == "synonym") {
      term.synonyms.push_back(parse_synonym(line, value));
    } else if (tag == "is_a") {
      const std::string_view parent = first_token(value);
      if (parent.empty()) fail(line, "is_a: missing parent id");
      add_edge(line, Relation::is_a, "is_a", parent);
    } else if (tag == "relationship") {
      const std::string_view label = first_token(value);
      const std::string_view target = first_token(trim(value.substr(label.size())));
      if (label.empty() || target.empty()) {
        fail(line, "relationship: expected a relation and a target id");
      }
      add_edge(line, relation_from_label(label), label, target);
    } else if (tag == "is_obsolete") {
      if (value == "true") {
        term.obsolete = true;
      } else if (value == "false") {
        term.obsolete = false;
      } else {
        fail(line, "is_obsolete: expected true or false");
      }
    }
  }

  Synonym parse_synonym(std::size_t line, std::string_view value) const {
    const std::string expected = "malformed synonym: expected \"TEXT\" SCOPE [xrefs]";
    auto quoted = read_quoted(value);
    if (!quoted) fail(line, expected);
    std::string_view rest = trim(quoted->rest);
    const std::string_view scope_text = first_token(rest);
    const auto scope = parse_scope(scope_text);
    if (!scope) fail(line, expected);
    rest = trim(rest.substr(scope_text.size()));
    // optional synonym type name before the xref list
    if (!rest.empty() && rest.front() != '[') rest = trim(rest.substr(first_token(rest).size()));
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') fail(line, expected);
    return Synonym{std::move(quoted->text), *scope};
  }

  void add_edge(std::size_t line, Relation relation, std::string_view label,
                std::string_view parent) {
    if (!is_valid_term_id(parent)) fail(line, "invalid target id '" + std::string(parent) + "'");
    RelationEdge edge;
    edge.parent_id = std::string(parent);
    edge.relation = relation;
    edge.label = relation == Relation::other ? std::string(label)
                                             : std::string(relation_name(relation));
    edge.line = line;
    pending_.edges.push_back(std::move(edge));
  }

  void finish_stanza() {
    if (section_ != Section::term) return;
    section_ = Section::skipped;
    ParsedTerm& term = pending_.term;
    if (!pending_.has_id) fail(term.line, "[Term] stanza is missing the required id: tag");
    if (term.name.empty() && !term.obsolete) fail(term.line, "term " + term.id + " has no name");
    for (auto& edge : pending_.edges) {
      if (edge.parent_id == term.id) fail(edge.line, "self-loop on " + term.id);
      edge.child_id = term.id;
      result_.edges.push_back(std::move(edge));
    }
    result_.terms.push_back(std::move(term));
  }

  std::string_view source_;
  std::string_view text_;
  Section section_ = Section::header;
  Pending pending_;
  ParsedOntology result_;
  std::unordered_map<std::string, std::size_t> seen_ids_;
};

// Unquoted values lose surrounding whitespace on reparse, so edge spaces are
// written as \W there.
std::string escape(std::string_view text, bool quoted) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '!': out += "\\!"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (!quoted && is_space(c) && (i == 0 || i + 1 == text.size())) {
          out += "\\W";
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

std::string_view scope_name(SynonymScope scope) {
  switch (scope) {
    case SynonymScope::exact: return "EXACT";
    case SynonymScope::broad: return "BROAD";
    case SynonymScope::narrow: return "NARROW";
    case SynonymScope::related: return "RELATED";
  }
  return "RELATED";
}

std::optional<SynonymScope> parse_scope(std::string_view text) {
  if (text == "EXACT") return SynonymScope::exact;
  if (text == "BROAD") return SynonymScope::broad;
  if (text == "NARROW") return SynonymScope::narrow;
  if (text == "RELATED") return SynonymScope::related;
  return std::nullopt;
}

bool is_valid_term_id(std::string_view id) {
  const std::size_t colon = id.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == id.size()) return false;
  for (std::size_t i = 0; i < id.size(); ++i) {
    const char c = id[i];
    const bool alpha = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    const bool digit = c >= '0' && c <= '9';
    if (i < colon) {
      if (!alpha) return false;
    } else if (i > colon) {
      if (!alpha && !digit) return false;
    }
  }
  return true;
}

ParsedOntology parse_obo_document(std::string_view source_name, std::string_view text) {
  return DocumentParser(source_name, text).run();
}

ParsedOntology resolve_references(ParsedOntology parsed, ResolveMode mode) {
  std::unordered_set<std::string> declared;
  for (const auto& term : parsed.terms) declared.insert(term.id);

  std::vector<Diagnostic> errors;
  for (const auto& edge : parsed.edges) {
    if (declared.contains(edge.parent_id)) continue;
    if (mode == ResolveMode::strict) {
      errors.push_back({parsed.source_name, edge.line,
                        "dangling reference to undeclared term " + edge.parent_id});
      continue;
    }
    declared.insert(edge.parent_id);
    ParsedTerm stub;
    stub.id = edge.parent_id;
    stub.name = edge.parent_id;
    stub.synthetic = true;
    stub.line = edge.line;
    parsed.terms.push_back(std::move(stub));
    parsed.warnings.push_back({parsed.source_name, edge.line,
                               "created stub for undeclared term " + edge.parent_id});
  }
  if (!errors.empty()) throw ParseErrors(std::move(errors));
  return parsed;
}

std::string to_canonical_obo(const ParsedOntology& ontology) {
  std::string out;
  if (!ontology.format_version.empty()) out += "format-version: " + ontology.format_version + "\n";
  out += "ontology: " + ontology.ontology_key + "\n";

  std::unordered_map<std::string_view, std::vector<const RelationEdge*>> edges_by_child;
  for (const auto& edge : ontology.edges) edges_by_child[edge.child_id].push_back(&edge);

  for (const auto& term : ontology.terms) {
    out += "\n[Term]\nid: " + term.id + "\n";
    if (!term.name.empty()) out += "name: " + escape(term.name, false) + "\n";
    if (term.definition) out += "def: \"" + escape(*term.definition, true) + "\" []\n";
    for (const auto& synonym : term.synonyms) {
      out += "synonym: \"" + escape(synonym.text, true) + "\" ";
      out += scope_name(synonym.scope);
      out += " []\n";
    }
    if (auto it = edges_by_child.find(term.id); it != edges_by_child.end()) {
      for (const RelationEdge* edge : it->second) {
        if (edge->relation == Relation::is_a) {
          out += "is_a: " + edge->parent_id + "\n";
        } else {
          out += "relationship: " + edge->label + " " + edge->parent_id + "\n";
        }
      }
    }
    if (term.obsolete) out += "is_obsolete: true\n";
  }
  return out;
}

}  // namespace ontoq
