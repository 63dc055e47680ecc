#pragma once

#include <stdexcept>
#include <string>

namespace gsd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownVertex : Error {
  explicit UnknownVertex(int v) : Error("unknown vertex " + std::to_string(v)) {}
};

struct SelfLoop : Error {
  explicit SelfLoop(int v) : Error("self loop on vertex " + std::to_string(v)) {}
};

struct UnknownQubit : Error {
  explicit UnknownQubit(int q) : Error("unknown qubit " + std::to_string(q)) {}
};

struct SizeLimitExceeded : Error {
  SizeLimitExceeded(const std::string& what, std::size_t n, std::size_t limit)
      : Error(what + ": n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit)) {}
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct UnsupportedClass : Error {
  using Error::Error;
};

struct ForcedOutcomeImpossible : Error {
  using Error::Error;
};

struct DeadCompanion : Error {
  explicit DeadCompanion(int v) : Error("companion for vertex " + std::to_string(v) + " is no longer live") {}
};

struct ProtocolOrderViolation : Error {
  using Error::Error;
};

struct TargetMismatch : Error {
  using Error::Error;
};

struct SystemMismatch : Error {
  using Error::Error;
};

struct InsufficientTargets : Error {
  using Error::Error;
};

struct InsufficientAux : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace gsd
