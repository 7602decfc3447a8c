#include "ontoq/lexical_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "ontoq/errors.hpp"
#include "text_util.hpp"

namespace ontoq {

std::string_view match_kind_name(MatchKind kind) {
  return kind == MatchKind::name ? "name" : "synonym";
}

LexicalIndex LexicalIndex::build(const OntologyIndex& index, bool include_obsolete) {
  LexicalIndex lex;
  lex.terms_.reserve(index.term_count());
  for (TermId id = 0; id < index.term_count(); ++id) {
    const Term& term = index.term(id);
    lex.terms_.push_back({term.id, term.name, term.ontology_key});
    if (term.obsolete && !include_obsolete) continue;
    lex.entries_.push_back({detail::ascii_lower(term.name), term.name, MatchKind::name,
                            std::nullopt, id});
    for (const auto& synonym : term.synonyms) {
      lex.entries_.push_back({detail::ascii_lower(synonym.text), synonym.text,
                              MatchKind::synonym, synonym.scope, id});
    }
  }

  lex.by_key_.resize(lex.entries_.size());
  for (std::size_t i = 0; i < lex.by_key_.size(); ++i) lex.by_key_[i] = i;
  std::sort(lex.by_key_.begin(), lex.by_key_.end(), [&](std::size_t a, std::size_t b) {
    return lex.entries_[a].key < lex.entries_[b].key;
  });

  for (std::size_t e = 0; e < lex.entries_.size(); ++e) {
    const std::string& key = lex.entries_[e].key;
    for (std::size_t i = 1; i < key.size(); ++i) {
      if (!detail::is_space(key[i]) && detail::is_space(key[i - 1])) {
        lex.word_starts_.push_back({e, i});
      }
    }
  }
  std::sort(lex.word_starts_.begin(), lex.word_starts_.end(),
            [&](const WordStart& a, const WordStart& b) {
              return lex.word_suffix(a) < lex.word_suffix(b);
            });
  return lex;
}

std::vector<AutocompleteMatch> LexicalIndex::autocomplete(
    std::string_view query, std::size_t limit,
    std::optional<std::string_view> ontology_filter) const {
  const std::string needle = detail::ascii_lower(detail::trim(query));
  if (needle.empty()) throw EmptyQueryError();
  if (limit == 0) throw std::invalid_argument("limit must be positive");

  struct Best {
    int tier;
    std::size_t entry;
  };
  std::unordered_map<TermId, Best> best;
  auto consider = [&](std::size_t entry_index, int tier) {
    const LexicalEntry& entry = entries_[entry_index];
    if (ontology_filter && terms_[entry.term].ontology_key != *ontology_filter) return;
    auto [it, inserted] = best.try_emplace(entry.term, Best{tier, entry_index});
    if (inserted) return;
    const LexicalEntry& current = entries_[it->second.entry];
    if (std::tie(tier, entry.key, entry.text) <
        std::tie(it->second.tier, current.key, current.text)) {
      it->second = Best{tier, entry_index};
    }
  };

  auto first = std::lower_bound(by_key_.begin(), by_key_.end(), needle,
                                [&](std::size_t e, const std::string& q) {
                                  return entries_[e].key < q;
                                });
  for (auto it = first; it != by_key_.end() && entries_[*it].key.starts_with(needle); ++it) {
    const LexicalEntry& entry = entries_[*it];
    if (entry.kind == MatchKind::name) {
      consider(*it, entry.key.size() == needle.size() ? 1 : 2);
    } else {
      consider(*it, 4);
    }
  }

  // A word can only start with a query that is itself a single word.
  if (std::none_of(needle.begin(), needle.end(), detail::is_space)) {
    auto word = std::lower_bound(word_starts_.begin(), word_starts_.end(), needle,
                                 [&](const WordStart& w, const std::string& q) {
                                   return word_suffix(w) < q;
                                 });
    for (; word != word_starts_.end() && word_suffix(*word).starts_with(needle); ++word) {
      consider(word->entry, entries_[word->entry].kind == MatchKind::name ? 3 : 5);
    }
  }

  std::vector<AutocompleteMatch> matches;
  matches.reserve(best.size());
  for (const auto& [term, choice] : best) {
    const LexicalEntry& entry = entries_[choice.entry];
    matches.push_back({terms_[term].id, terms_[term].name, entry.text, entry.kind, choice.tier});
  }
  auto order = [](const AutocompleteMatch& a, const AutocompleteMatch& b) {
    return std::tie(a.tier, a.display_name, a.term) < std::tie(b.tier, b.display_name, b.term);
  };
  if (matches.size() > limit) {
    std::partial_sort(matches.begin(), matches.begin() + static_cast<std::ptrdiff_t>(limit),
                      matches.end(), order);
    matches.resize(limit);
  } else {
    std::sort(matches.begin(), matches.end(), order);
  }
  return matches;
}

}  // namespace ontoq
