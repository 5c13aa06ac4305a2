#pragma once

#include <stdexcept>
#include <string>

namespace otk {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an operation precondition (mismatched rings, unknown variable, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), message_(what), position_(position) {}
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class MissingTheta : public InvalidConfig {
 public:
  using InvalidConfig::InvalidConfig;
};

class NotUnimodular : public InvalidConfig {
 public:
  using InvalidConfig::InvalidConfig;
};

class DegenerateTheta : public InvalidConfig {
 public:
  using InvalidConfig::InvalidConfig;
};

class Inhomogeneous : public Error {
 public:
  using Error::Error;
};

class OracleScale : public Error {
 public:
  using Error::Error;
};

class SpanFailure : public Error {
 public:
  SpanFailure(const std::string& what, int degree) : Error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class PsiIllDefined : public Error {
 public:
  PsiIllDefined(const std::string& what, int degree, std::string witness)
      : Error(what), degree_(degree), witness_(std::move(witness)) {}
  int degree() const { return degree_; }
  const std::string& witness() const { return witness_; }

 private:
  int degree_;
  std::string witness_;
};

/// An identity that must hold by construction failed; indicates a library bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace otk
