#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ontoq {

// A located message. line is 1-based; 0 means "whole file".
struct Diagnostic {
  std::string file;
  std::size_t line = 0;
  std::string message;

  std::string to_string() const;
  bool operator==(const Diagnostic&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(Diagnostic diagnostic);
  ParseError(std::string file, std::size_t line, std::string message);

  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }
  const std::string& file() const noexcept { return diagnostic_.file; }
  std::size_t line() const noexcept { return diagnostic_.line; }
  const std::string& message() const noexcept { return diagnostic_.message; }

 private:
  Diagnostic diagnostic_;
};

// Several independent parse failures, e.g. every dangling reference of a
// document checked in strict mode.
class ParseErrors : public std::runtime_error {
 public:
  explicit ParseErrors(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// One witness cycle over closure-eligible edges; front() == back().
class CycleError : public std::runtime_error {
 public:
  explicit CycleError(std::vector<std::string> cycle);

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class DuplicateTermError : public std::runtime_error {
 public:
  DuplicateTermError(std::string term, std::string first_source, std::string second_source);

  const std::string& term() const noexcept { return term_; }

 private:
  std::string term_;
};

class UnknownTermError : public std::runtime_error {
 public:
  explicit UnknownTermError(std::string term);

  const std::string& term() const noexcept { return term_; }

 private:
  std::string term_;
};

class EmptyQueryError : public std::invalid_argument {
 public:
  EmptyQueryError() : std::invalid_argument("empty query") {}
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StartupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ontoq
