#include "ontoq/annotation_store.hpp"

#include <algorithm>

#include "text_util.hpp"

namespace ontoq {

std::string_view annotation_type_name(AnnotationType type) {
  switch (type) {
    case AnnotationType::expression: return "expression";
    case AnnotationType::phenotype: return "phenotype";
    case AnnotationType::function: return "function";
  }
  return "expression";
}

std::optional<AnnotationType> parse_annotation_type(std::string_view text) {
  if (text == "expression") return AnnotationType::expression;
  if (text == "phenotype") return AnnotationType::phenotype;
  if (text == "function") return AnnotationType::function;
  return std::nullopt;
}

std::vector<std::string_view> AnnotatedEntity::components() const {
  std::vector<std::string_view> out{primary};
  if (secondary) out.push_back(*secondary);
  return out;
}

std::string AnnotatedEntity::to_string() const {
  return secondary ? primary + "^" + *secondary : primary;
}

AnnotationLoad parse_annotation_file(std::string_view text, const OntologyIndex& index,
                                     std::string_view source_name) {
  const std::string source(source_name);
  AnnotationLoad load;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (line.starts_with('#') || detail::trim(line).empty()) continue;
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 5) {
      throw ParseError(source, line_no,
                       "expected 5 tab-separated columns, found " + std::to_string(fields.size()));
    }
    const std::string_view object_id = detail::trim(fields[0]);
    if (object_id.empty()) throw ParseError(source, line_no, "empty object id");
    const auto type = parse_annotation_type(detail::trim(fields[2]));
    if (!type) {
      throw ParseError(source, line_no,
                       "unknown annotation type '" + std::string(detail::trim(fields[2])) + "'");
    }
    const std::string_view first = detail::trim(fields[3]);
    const std::string_view second = detail::trim(fields[4]);
    if (first.empty()) throw ParseError(source, line_no, "missing term id");
    if (first == second) {
      throw ParseError(source, line_no, "post-composed pair repeats " + std::string(first));
    }

    Annotation annotation;
    annotation.object = {std::string(object_id), std::string(detail::trim(fields[1]))};
    annotation.entity.primary = std::string(first);
    if (!second.empty()) annotation.entity.secondary = std::string(second);
    annotation.type = *type;
    annotation.source_line = line_no;

    for (std::string_view component : annotation.entity.components()) {
      const auto id = index.find(component);
      if (!id) throw ParseError(source, line_no, "unknown term " + std::string(component));
      if (index.term(*id).obsolete) {
        load.warnings.push_back({source, line_no, "term " + std::string(component) + " is obsolete"});
      }
    }
    load.annotations.push_back(std::move(annotation));
  }
  return load;
}

AnnotationIndex AnnotationIndex::build(std::vector<Annotation> annotations) {
  AnnotationIndex index;
  index.all_ = std::move(annotations);
  for (AnnotationRef ref = 0; ref < index.all_.size(); ++ref) {
    const Annotation& a = index.all_[ref];
    for (std::string_view component : a.entity.components()) {
      index.by_term_[std::string(component)].push_back(ref);
    }
    index.by_object_[a.object.id].push_back(ref);
  }
  return index;
}

std::span<const AnnotationRef> AnnotationIndex::by_term(std::string_view term) const {
  auto it = by_term_.find(term);
  if (it == by_term_.end()) return {};
  return it->second;
}

std::span<const AnnotationRef> AnnotationIndex::by_object(std::string_view object) const {
  auto it = by_object_.find(object);
  if (it == by_object_.end()) return {};
  return it->second;
}

std::vector<AnnotationRef> AnnotationIndex::annotations_for_terms(const TermIdSet& terms,
                                                                  MatchMode mode) const {
  std::vector<AnnotationRef> out;
  for (const auto& term : terms) {
    for (AnnotationRef ref : by_term(term)) {
      if (!all_[ref].entity.is_post_composed() || mode == MatchMode::with_composites) {
        out.push_back(ref);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ontoq
