#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqgraph {

enum class ErrorCode {
  InvalidSpec,
  GenerationStall,
  DomainError,
  TooFewVertices,
  DuplicateValues,
  ConvergenceFailure,
  NotMeanZero,
  ZeroVector,
  DegenerateEmbedding,
  MalformedLine,
  NonMonotoneIndex,
  DimensionMismatch,
  Io,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the b-file reader; carries the 1-based offending line.
class LineError : public Error {
 public:
  LineError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace seqgraph
