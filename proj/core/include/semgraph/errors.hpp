#pragma once

#include <stdexcept>
#include <string>

namespace semgraph {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input tensor/image dimensions do not match the declared shape.
class InputShapeError : public Error {
 public:
  using Error::Error;
};

/// A point cloud was passed in the wrong reference frame.
class FrameMisuseError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs at least one element received none.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// A document violates its schema (taxonomy files, config files).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// An id was looked up that does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// The operation is not allowed on this argument (e.g. pruning the root).
class InvalidOperationError : public Error {
 public:
  using Error::Error;
};

/// A required input file is absent.
class DataMissingError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or structured data; the message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Transport-level failure talking to a remote service; retriable.
class NetworkError : public Error {
 public:
  using Error::Error;
};

/// The remote service answered with a non-2xx status.
class ProviderError : public Error {
 public:
  ProviderError(const std::string& message, int status)
      : Error(message), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

/// A concept of the wrong kind was used (e.g. non-object instance concept).
class KindError : public Error {
 public:
  using Error::Error;
};

/// A dataset directory is missing required pieces.
class DatasetError : public Error {
 public:
  using Error::Error;
};

/// Filesystem write/read failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line usage; maps to exit code 2 in the CLI.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace semgraph
