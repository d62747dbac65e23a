#pragma once

#include <stdexcept>
#include <string>

namespace padic {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidPrime : Error {
  explicit InvalidPrime(const std::string& msg) : Error(msg) {}
};

struct InvalidQuadratic : Error {
  explicit InvalidQuadratic(const std::string& msg) : Error(msg) {}
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

struct NotAResidue : Error {
  explicit NotAResidue(const std::string& msg) : Error(msg) {}
};

// No square root exists in the p-adic integers: odd valuation or
// non-residue unit part. This is the finite-tree trigger in the classifier.
struct NoSquareRoot : Error {
  explicit NoSquareRoot(const std::string& msg) : Error(msg) {}
};

struct NotASimpleRoot : Error {
  explicit NotASimpleRoot(const std::string& msg) : Error(msg) {}
};

struct WrongClassification : Error {
  explicit WrongClassification(const std::string& msg) : Error(msg) {}
};

struct InsufficientData : Error {
  explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

struct MismatchedInput : Error {
  explicit MismatchedInput(const std::string& msg) : Error(msg) {}
};

}  // namespace padic
