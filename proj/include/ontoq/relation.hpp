#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ontoq {

// Edge types. Only the first three are closure-eligible; `other` keeps its
// label but is never traversed.
enum class Relation : std::uint8_t { is_a, part_of, develops_from, other };

std::string_view relation_name(Relation relation);

// Maps "is_a", "part_of", "develops_from"; anything else is `other`.
Relation relation_from_label(std::string_view label);

// A subset of {is_a, part_of, develops_from}, stored as a 3-bit mask.
class RelationSet {
 public:
  static constexpr unsigned kMaskCount = 8;

  constexpr RelationSet() = default;
  constexpr RelationSet(std::initializer_list<Relation> relations) {
    for (Relation r : relations) insert(r);
  }

  static constexpr RelationSet defaults() { return {Relation::is_a, Relation::part_of}; }
  static constexpr RelationSet all() {
    return {Relation::is_a, Relation::part_of, Relation::develops_from};
  }
  static constexpr RelationSet from_mask(unsigned mask) {
    RelationSet set;
    set.mask_ = static_cast<std::uint8_t>(mask & 0x7u);
    return set;
  }

  // Comma separated relation names, e.g. "is_a,part_of". Throws
  // std::invalid_argument on unknown names or an empty list.
  static RelationSet parse(std::string_view text);

  constexpr void insert(Relation r) {
    if (r != Relation::other) mask_ |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(r));
  }
  constexpr bool contains(Relation r) const {
    return r != Relation::other && (mask_ >> static_cast<unsigned>(r)) & 1u;
  }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr unsigned mask() const { return mask_; }
  constexpr bool is_subset_of(RelationSet other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<std::string> names() const;
  std::string to_string() const;

  constexpr bool operator==(const RelationSet&) const = default;

 private:
  std::uint8_t mask_ = 0;
};

// Directed child -> parent edge as read from an ontology document.
struct RelationEdge {
  std::string child_id;
  std::string parent_id;
  Relation relation = Relation::is_a;
  std::string label;  // canonical name, or the raw label for `other`
  std::size_t line = 0;

  // Source line is provenance only and does not take part in equality.
  bool operator==(const RelationEdge& rhs) const {
    return child_id == rhs.child_id && parent_id == rhs.parent_id && relation == rhs.relation &&
           label == rhs.label;
  }
};

}  // namespace ontoq
