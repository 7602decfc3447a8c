#include "ontoq/ontology_index.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "ontoq/errors.hpp"

namespace ontoq {

struct OntologyIndex::ClosureCache {
  std::array<std::once_flag, RelationSet::kMaskCount> once;
  std::array<std::unique_ptr<Reachability>, RelationSet::kMaskCount> closures;
};

OntologyIndex::OntologyIndex() : cache_(std::make_unique<ClosureCache>()) {}
OntologyIndex::~OntologyIndex() = default;
OntologyIndex::OntologyIndex(OntologyIndex&&) noexcept = default;
OntologyIndex& OntologyIndex::operator=(OntologyIndex&&) noexcept = default;

namespace {

bool closure_eligible(Relation r) { return r != Relation::other; }

// Kahn ordering with parents first. Returns the nodes left over when a cycle
// blocks progress.
std::vector<TermId> topological_order(const std::vector<std::vector<TermEdge>>& up,
                                      const std::vector<std::vector<TermEdge>>& down,
                                      std::vector<TermId>& leftover) {
  const std::size_t n = up.size();
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& e : up[v]) {
      if (closure_eligible(e.relation)) ++pending[v];
    }
  }
  std::vector<TermId> order;
  order.reserve(n);
  for (TermId v = 0; v < n; ++v) {
    if (pending[v] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& e : down[order[head]]) {
      if (closure_eligible(e.relation) && --pending[e.other] == 0) order.push_back(e.other);
    }
  }
  for (TermId v = 0; v < n; ++v) {
    if (pending[v] != 0) leftover.push_back(v);
  }
  return order;
}

// Every leftover node still has an unprocessed eligible parent, so walking
// parents from any of them must revisit a node.
std::vector<TermId> find_cycle(const std::vector<std::vector<TermEdge>>& up,
                               const std::vector<TermId>& leftover) {
  std::vector<bool> blocked(up.size(), false);
  for (TermId v : leftover) blocked[v] = true;
  std::unordered_map<TermId, std::size_t> position;
  std::vector<TermId> walk;
  TermId current = leftover.front();
  while (!position.contains(current)) {
    position.emplace(current, walk.size());
    walk.push_back(current);
    for (const auto& e : up[current]) {
      if (closure_eligible(e.relation) && blocked[e.other]) {
        current = e.other;
        break;
      }
    }
  }
  std::vector<TermId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(position[current]),
                            walk.end());
  cycle.push_back(current);
  return cycle;
}

}  // namespace

OntologyIndex OntologyIndex::build(std::span<const ParsedOntology> parsed) {
  OntologyIndex index;

  struct Declared {
    const ParsedTerm* term;
    std::size_t document;
  };
  std::unordered_map<std::string, Declared> declared;
  for (std::size_t doc = 0; doc < parsed.size(); ++doc) {
    for (const auto& term : parsed[doc].terms) {
      auto [it, inserted] = declared.emplace(term.id, Declared{&term, doc});
      if (!inserted) {
        throw DuplicateTermError(term.id, parsed[it->second.document].source_name,
                                 parsed[doc].source_name);
      }
    }
  }

  std::vector<std::string> ids;
  ids.reserve(declared.size());
  for (const auto& [id, _] : declared) ids.push_back(id);
  std::sort(ids.begin(), ids.end());

  std::unordered_map<std::string_view, TermId> lookup;
  index.terms_.reserve(ids.size());
  for (const auto& id : ids) {
    const Declared& d = declared.at(id);
    const ParsedOntology& doc = parsed[d.document];
    Term term;
    term.id = id;
    term.name = d.term->name;
    term.definition = d.term->definition;
    term.synonyms = d.term->synonyms;
    term.ontology_key = doc.ontology_key;
    term.obsolete = d.term->obsolete;
    term.synthetic = d.term->synthetic;
    index.terms_.push_back(std::move(term));
  }
  for (TermId i = 0; i < index.terms_.size(); ++i) lookup.emplace(index.terms_[i].id, i);

  for (std::size_t doc = 0; doc < parsed.size(); ++doc) {
    auto& info = index.ontologies_[parsed[doc].ontology_key];
    info.key = parsed[doc].ontology_key;
    if (info.format_version.empty()) info.format_version = parsed[doc].format_version;
    info.sources.push_back(parsed[doc].source_name);
  }
  for (TermId i = 0; i < index.terms_.size(); ++i) {
    index.ontologies_[index.terms_[i].ontology_key].terms.push_back(i);
  }

  const std::size_t n = index.terms_.size();
  index.up_edges_.resize(n);
  index.down_edges_.resize(n);
  for (std::size_t doc = 0; doc < parsed.size(); ++doc) {
    for (const auto& edge : parsed[doc].edges) {
      auto parent = declared.find(edge.parent_id);
      if (parent == declared.end() || parent->second.document != doc) {
        throw ParseError(parsed[doc].source_name, edge.line,
                         "edge target " + edge.parent_id + " is not declared in this document");
      }
      const TermId child = lookup.at(edge.child_id);
      const TermId target = lookup.at(edge.parent_id);
      index.up_edges_[child].push_back({target, edge.relation, edge.label});
      index.down_edges_[target].push_back({child, edge.relation, edge.label});
      ++index.edge_count_;
    }
  }
  auto edge_order = [](const TermEdge& a, const TermEdge& b) {
    return std::tie(a.other, a.relation, a.label) < std::tie(b.other, b.relation, b.label);
  };
  auto edge_equal = [](const TermEdge& a, const TermEdge& b) {
    return a.other == b.other && a.relation == b.relation && a.label == b.label;
  };
  for (auto* lists : {&index.up_edges_, &index.down_edges_}) {
    for (auto& list : *lists) {
      std::sort(list.begin(), list.end(), edge_order);
      list.erase(std::unique(list.begin(), list.end(), edge_equal), list.end());
    }
  }

  std::vector<TermId> leftover;
  index.topo_order_ = topological_order(index.up_edges_, index.down_edges_, leftover);
  if (!leftover.empty()) {
    std::vector<std::string> witness;
    for (TermId v : find_cycle(index.up_edges_, leftover)) witness.push_back(index.terms_[v].id);
    throw CycleError(std::move(witness));
  }

  index.closure(RelationSet::defaults());
  return index;
}

std::optional<TermId> OntologyIndex::find(std::string_view id) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), id,
                             [](const Term& t, std::string_view key) { return t.id < key; });
  if (it == terms_.end() || it->id != id) return std::nullopt;
  return static_cast<TermId>(it - terms_.begin());
}

TermId OntologyIndex::resolve(std::string_view id) const {
  if (auto found = find(id)) return *found;
  throw UnknownTermError(std::string(id));
}

bool OntologyIndex::has_edge(TermId child, TermId parent, RelationSet relations) const {
  for (const auto& e : up_edges_[child]) {
    if (e.other == parent && relations.contains(e.relation)) return true;
  }
  return false;
}

const Reachability& OntologyIndex::closure(RelationSet relations) const {
  if (relations.empty()) throw std::invalid_argument("relation set must not be empty");
  const unsigned slot = relations.mask();
  std::call_once(cache_->once[slot], [&] {
    std::vector<std::vector<TermId>> parents(terms_.size());
    for (TermId v = 0; v < terms_.size(); ++v) {
      for (const auto& e : up_edges_[v]) {
        if (relations.contains(e.relation) &&
            (parents[v].empty() || parents[v].back() != e.other)) {
          parents[v].push_back(e.other);
        }
      }
    }
    cache_->closures[slot] =
        std::make_unique<Reachability>(compute_reachability(parents, topo_order_));
  });
  return *cache_->closures[slot];
}

TermIdSet OntologyIndex::to_id_set(std::span<const TermId> ids) const {
  TermIdSet out;
  for (TermId id : ids) out.emplace_hint(out.end(), terms_[id].id);
  return out;
}

TermIdSet OntologyIndex::descendants(std::string_view id, RelationSet relations) const {
  return to_id_set(descendant_ids(resolve(id), relations));
}

TermIdSet OntologyIndex::ancestors(std::string_view id, RelationSet relations) const {
  return to_id_set(ancestor_ids(resolve(id), relations));
}

TermIdSet OntologyIndex::children(std::string_view id, RelationSet relations) const {
  if (relations.empty()) throw std::invalid_argument("relation set must not be empty");
  TermIdSet out;
  for (const auto& e : down_edges_[resolve(id)]) {
    if (relations.contains(e.relation)) out.insert(terms_[e.other].id);
  }
  return out;
}

TermIdSet OntologyIndex::parents(std::string_view id, RelationSet relations) const {
  if (relations.empty()) throw std::invalid_argument("relation set must not be empty");
  TermIdSet out;
  for (const auto& e : up_edges_[resolve(id)]) {
    if (relations.contains(e.relation)) out.insert(terms_[e.other].id);
  }
  return out;
}

}  // namespace ontoq
