#pragma once

#include <stdexcept>
#include <string>

namespace situkg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A term or triple violates an RDF structural invariant.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class UnknownPrefixError : public Error {
 public:
  explicit UnknownPrefixError(std::string prefix)
      : Error("unknown prefix '" + prefix + ":'"), prefix_(std::move(prefix)) {}

  const std::string& prefix() const noexcept { return prefix_; }

 private:
  std::string prefix_;
};

}  // namespace situkg
