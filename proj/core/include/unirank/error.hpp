#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace unirank {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One schema or referential-integrity problem found while loading.
struct Issue {
  std::string file;
  std::size_t line = 0;    // 1-based, 0 when not tied to a row
  std::size_t column = 0;  // 1-based, 0 when not tied to a field
  std::string message;

  std::string to_string() const;
};

/// Input did not satisfy the schema or referential integrity. Carries every
/// issue found, not just the first one.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues);
  explicit ValidationError(const std::string& message);

  const std::vector<Issue>& issues() const noexcept { return issues_; }

 private:
  std::vector<Issue> issues_;
};

/// Scores could not be computed (missing baseline, undefined national
/// reference, threshold not met, ...).
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace unirank
