#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace perfcode {

enum class ErrorKind {
  InvalidSpec,
  OrderBoundExceeded,
  BadTableFile,
  InvalidElement,
  NotAbelian,
  NotNormal,
  NotSubgroup,
  ContainsIdentity,
  NotInverseClosed,
  MissingIdentity,
  NotInvolution,
  IsSquare,
  HasOrder4Element,
  InvalidN,
  SearchBudgetExceeded,
  SyntaxError,
  SemanticError,
  VerificationFailed,
  Usage,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure in the group-spec DSL or a label expression.
/// `offset` is a byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& message)
      : Error(ErrorKind::SyntaxError, message),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace perfcode
