#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace drs {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problems with user-supplied input (files, corpora, tables). The CLI maps
/// these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class MalformedClause : public InputError {
 public:
  MalformedClause(std::string message, std::string line, std::size_t column)
      : InputError(message), message_(std::move(message)), line_(std::move(line)), column_(column) {}

  const std::string& message() const { return message_; }
  const std::string& line() const { return line_; }
  /// 1-based column of the offending token (0 when not attributable).
  std::size_t column() const { return column_; }
  std::optional<std::size_t> document() const { return document_; }
  std::optional<std::size_t> line_number() const { return line_number_; }

  /// Attaches corpus coordinates; what() is rebuilt to include them.
  MalformedClause located(std::size_t document, std::size_t line_number) const {
    MalformedClause out = *this;
    out.document_ = document;
    out.line_number_ = line_number;
    out.describe_ = "document " + std::to_string(document + 1) + ", line " + std::to_string(line_number) +
                    ", column " + std::to_string(column_) + ": " + message_ + " in '" + line_ + "'";
    return out;
  }

  const char* what() const noexcept override {
    return describe_.empty() ? InputError::what() : describe_.c_str();
  }

 private:
  std::string message_;
  std::string line_;
  std::size_t column_ = 0;
  std::optional<std::size_t> document_;
  std::optional<std::size_t> line_number_;
  std::string describe_;
};

class UnclassifiableToken : public InputError {
 public:
  explicit UnclassifiableToken(std::string token)
      : InputError("unclassifiable operator token '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class LengthMismatch : public InputError {
 public:
  LengthMismatch(std::size_t left, std::size_t right)
      : InputError("LengthMismatch: " + std::to_string(left) + " vs " + std::to_string(right) + " documents") {}
};

class InvalidGold : public InputError {
 public:
  using InputError::InputError;
};

class RequiresValidForm : public InputError {
 public:
  using InputError::InputError;
};

class UnresolvableOffset : public InputError {
 public:
  using InputError::InputError;
};

class MalformedRelativeToken : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  DimensionMismatch(std::size_t line, std::size_t expected, std::size_t found)
      : InputError("DimensionMismatch: line " + std::to_string(line) + " has " + std::to_string(found) +
                   " components, expected " + std::to_string(expected)),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyFile : public InputError {
 public:
  using InputError::InputError;
};

class EmptyTrainingSet : public InputError {
 public:
  EmptyTrainingSet() : InputError("EmptyTrainingSet: no training pairs") {}
};

class PhenomenonAbsentInGold : public InputError {
 public:
  using InputError::InputError;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace drs
