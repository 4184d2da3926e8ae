#pragma once

#include <stdexcept>
#include <string>

namespace abfactor {

/// Malformed input: bad parameters, out-of-range orders, undecodable graph6.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters excluded by a handshake-parity hypothesis (a = b and n*a odd).
class ParityExcluded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A search budget or enumeration cap was exceeded. The result is unknown,
/// never silently wrong.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative eigensolver failed to certify its tolerance.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace abfactor
