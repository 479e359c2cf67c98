#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lucidsum {

// Base class for every error thrown by this library. Pipeline stages prefix
// the message with a stage label via add_stage() before re-throwing.
class Error : public std::runtime_error {
public:
  explicit Error(std::string msg) : std::runtime_error(msg), msg_(std::move(msg)) {}

  const char* what() const noexcept override { return msg_.c_str(); }

  void add_stage(std::string_view stage) { msg_ = std::string(stage) + ": " + msg_; }

private:
  std::string msg_;
};

// Input bytes are not valid UTF-8.
class InvalidEncoding : public Error {
public:
  using Error::Error;
};

// An operation received input it cannot produce a meaningful result for
// (zero sentences where at least one is required, empty vocabulary, ...).
class DegenerateInput : public Error {
public:
  using Error::Error;
};

// A document with no sentences was handed to a summarizer.
class EmptyDocument : public Error {
public:
  using Error::Error;
};

// Matrix dimensions do not satisfy an operation's requirements.
class DimensionError : public Error {
public:
  using Error::Error;
};

// A matrix contains NaN or infinite entries.
class NonFinite : public Error {
public:
  using Error::Error;
};

// A transition matrix column does not sum to one.
class NotStochastic : public Error {
public:
  using Error::Error;
};

// Power iteration hit its iteration cap while still far from a fixed point.
class NoConvergence : public Error {
public:
  using Error::Error;
};

// A configuration value or command template is invalid.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Reading input or writing output failed.
class IoError : public Error {
public:
  using Error::Error;
};

// An external adapter command failed; carries the exit code and whatever the
// command wrote to stderr.
class AdapterError : public Error {
public:
  AdapterError(std::string msg, int exit_code, std::string stderr_output)
      : Error(std::move(msg)), exit_code_(exit_code), stderr_output_(std::move(stderr_output)) {}

  explicit AdapterError(std::string msg) : Error(std::move(msg)) {}

  int exit_code() const noexcept { return exit_code_; }
  const std::string& stderr_output() const noexcept { return stderr_output_; }

private:
  int exit_code_ = -1;
  std::string stderr_output_;
};

}  // namespace lucidsum
