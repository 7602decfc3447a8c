#include "ontoq/errors.hpp"

#include <utility>

namespace ontoq {

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string text;
  for (const auto& d : diagnostics) {
    if (!text.empty()) text += '\n';
    text += d.to_string();
  }
  return text;
}

std::string render_cycle(const std::vector<std::string>& cycle) {
  std::string text = "cycle detected: ";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i != 0) text += " -> ";
    text += cycle[i];
  }
  return text;
}

}  // namespace

std::string Diagnostic::to_string() const {
  std::string text = file;
  if (line != 0) text += ":" + std::to_string(line);
  if (!text.empty()) text += ": ";
  return text + message;
}

ParseError::ParseError(Diagnostic diagnostic)
    : std::runtime_error(diagnostic.to_string()), diagnostic_(std::move(diagnostic)) {}

ParseError::ParseError(std::string file, std::size_t line, std::string message)
    : ParseError(Diagnostic{std::move(file), line, std::move(message)}) {}

ParseErrors::ParseErrors(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

CycleError::CycleError(std::vector<std::string> cycle)
    : std::runtime_error(render_cycle(cycle)), cycle_(std::move(cycle)) {}

DuplicateTermError::DuplicateTermError(std::string term, std::string first_source,
                                       std::string second_source)
    : std::runtime_error("duplicate term " + term + " declared in " + first_source + " and " +
                         second_source),
      term_(std::move(term)) {}

UnknownTermError::UnknownTermError(std::string term)
    : std::runtime_error("unknown term " + term), term_(std::move(term)) {}

}  // namespace ontoq
