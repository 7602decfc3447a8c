#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontoq/errors.hpp"
#include "ontoq/ontology_index.hpp"

namespace ontoq {

enum class AnnotationType { expression, phenotype, function };

std::string_view annotation_type_name(AnnotationType type);
std::optional<AnnotationType> parse_annotation_type(std::string_view text);

struct DataObject {
  std::string id;
  std::string object_type;  // free-form: gene, genotype, ...

  bool operator==(const DataObject&) const = default;
};

// A single term, or an ordered post-composed pair (entity, process/quality).
struct AnnotatedEntity {
  std::string primary;
  std::optional<std::string> secondary;

  bool is_post_composed() const { return secondary.has_value(); }
  std::vector<std::string_view> components() const;
  // "ZFA:0000003" or "ZFA:0000010^GO:0000001"
  std::string to_string() const;

  bool operator==(const AnnotatedEntity&) const = default;
};

struct Annotation {
  DataObject object;
  AnnotatedEntity entity;
  AnnotationType type = AnnotationType::expression;
  std::size_t source_line = 0;

  bool operator==(const Annotation&) const = default;
};

struct AnnotationLoad {
  std::vector<Annotation> annotations;
  std::vector<Diagnostic> warnings;
};

// Five tab-separated columns per row:
//   object_id  object_type  annotation_type  term1_id  term2_id
// term2_id is empty for single-term annotations; `#` lines are comments.
// Throws ParseError on a wrong column count, an unknown annotation type or
// an unknown term. Obsolete terms load with a warning.
AnnotationLoad parse_annotation_file(std::string_view text, const OntologyIndex& index,
                                     std::string_view source_name = "annotations");

using AnnotationRef = std::size_t;

enum class MatchMode { simple_only, with_composites };

class AnnotationIndex {
 public:
  static AnnotationIndex build(std::vector<Annotation> annotations);

  std::size_t size() const { return all_.size(); }
  const std::vector<Annotation>& all() const { return all_; }
  const Annotation& at(AnnotationRef ref) const { return all_[ref]; }

  // A post-composed annotation is listed under both of its components.
  std::span<const AnnotationRef> by_term(std::string_view term) const;
  std::span<const AnnotationRef> by_object(std::string_view object) const;
  const std::map<std::string, std::vector<AnnotationRef>, std::less<>>& term_map() const {
    return by_term_;
  }

  // Sorted, duplicate-free references.
  std::vector<AnnotationRef> annotations_for_terms(const TermIdSet& terms, MatchMode mode) const;

 private:
  std::vector<Annotation> all_;
  std::map<std::string, std::vector<AnnotationRef>, std::less<>> by_term_;
  std::map<std::string, std::vector<AnnotationRef>, std::less<>> by_object_;
};

}  // namespace ontoq
