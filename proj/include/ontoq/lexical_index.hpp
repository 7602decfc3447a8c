#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontoq/ontology_index.hpp"

namespace ontoq {

enum class MatchKind { name, synonym };

std::string_view match_kind_name(MatchKind kind);

struct LexicalEntry {
  std::string key;   // ASCII case-folded text
  std::string text;  // original text
  MatchKind kind = MatchKind::name;
  std::optional<SynonymScope> scope;
  TermId term = 0;
};

// Tiers, best first:
//   1 query equals the name
//   2 name starts with the query
//   3 a whitespace-delimited word of the name starts with the query
//   4 a synonym equals or starts with the query
//   5 a word of a synonym starts with the query
struct AutocompleteMatch {
  std::string term;
  std::string display_name;
  std::string matched_text;
  MatchKind matched_kind = MatchKind::name;
  int tier = 0;

  bool operator==(const AutocompleteMatch&) const = default;
};

class LexicalIndex {
 public:
  // One name entry per term plus one entry per synonym. Obsolete terms are
  // left out unless include_obsolete is set.
  static LexicalIndex build(const OntologyIndex& index, bool include_obsolete = false);

  std::span<const LexicalEntry> entries() const { return entries_; }

  // Matching is ASCII case-insensitive on the trimmed query. Results are
  // ordered by (tier, display name, term id), one per term, at most `limit`.
  // Throws EmptyQueryError for a blank query and std::invalid_argument for
  // limit == 0.
  std::vector<AutocompleteMatch> autocomplete(
      std::string_view query, std::size_t limit,
      std::optional<std::string_view> ontology_filter = std::nullopt) const;

 private:
  struct TermRecord {
    std::string id;
    std::string name;
    std::string ontology_key;
  };
  struct WordStart {
    std::size_t entry;
    std::size_t offset;
  };

  std::string_view word_suffix(const WordStart& w) const {
    return std::string_view(entries_[w.entry].key).substr(w.offset);
  }

  std::vector<TermRecord> terms_;
  std::vector<LexicalEntry> entries_;
  std::vector<std::size_t> by_key_;    // entry indices sorted by key
  std::vector<WordStart> word_starts_;  // non-initial word starts sorted by suffix
};

}  // namespace ontoq
