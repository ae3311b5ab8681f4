#pragma once

#include <stdexcept>
#include <string>

namespace leechcert {

/** Base class for every failure raised by this library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Malformed textual input (rationals, polynomial expressions, files). */
class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class EmptyNeighborhood : public Error {
 public:
  using Error::Error;
};

class OddDimensionUnsupported : public Error {
 public:
  using Error::Error;
};

/**
 * Two ordered pairs at the same inner product see different triangle counts.
 * The message names both witness pairs and the differing cell.
 */
class NotAScheme : public Error {
 public:
  using Error::Error;
};

class InvalidCertificate : public Error {
 public:
  using Error::Error;
};

class NoCertificateFound : public Error {
 public:
  using Error::Error;
};

class NotIntegral : public Error {
 public:
  using Error::Error;
};

class NotEven : public Error {
 public:
  using Error::Error;
};

class ExtensionStuck : public Error {
 public:
  using Error::Error;
};

class NonIntegerCoordinate : public Error {
 public:
  using Error::Error;
};

class NormalizationImpossible : public Error {
 public:
  using Error::Error;
};

class UnclassifiableVector : public Error {
 public:
  using Error::Error;
};

class ParityViolation : public Error {
 public:
  using Error::Error;
};

class SpanMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace leechcert
