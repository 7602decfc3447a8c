#include "ontoq/relation.hpp"

#include <stdexcept>

namespace ontoq {

std::string_view relation_name(Relation relation) {
  switch (relation) {
    case Relation::is_a: return "is_a";
    case Relation::part_of: return "part_of";
    case Relation::develops_from: return "develops_from";
    case Relation::other: return "other";
  }
  return "other";
}

Relation relation_from_label(std::string_view label) {
  if (label == "is_a") return Relation::is_a;
  if (label == "part_of") return Relation::part_of;
  if (label == "develops_from") return Relation::develops_from;
  return Relation::other;
}

RelationSet RelationSet::parse(std::string_view text) {
  RelationSet set;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view name = text.substr(pos, comma - pos);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) {
      Relation r = relation_from_label(name);
      if (r == Relation::other) {
        throw std::invalid_argument("unknown relation '" + std::string(name) + "'");
      }
      set.insert(r);
    }
    pos = comma + 1;
  }
  if (set.empty()) throw std::invalid_argument("relation set must not be empty");
  return set;
}

std::vector<std::string> RelationSet::names() const {
  std::vector<std::string> out;
  for (Relation r : {Relation::is_a, Relation::part_of, Relation::develops_from}) {
    if (contains(r)) out.emplace_back(relation_name(r));
  }
  return out;
}

std::string RelationSet::to_string() const {
  std::string text;
  for (const auto& name : names()) {
    if (!text.empty()) text += ',';
    text += name;
  }
  return text;
}

}  // namespace ontoq
