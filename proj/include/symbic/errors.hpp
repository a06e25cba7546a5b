#pragma once

#include <stdexcept>
#include <string>

namespace symbic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds an enumeration cap (minor size, leaf count, ...).
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input (shape mismatch, bad index, bad file).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The matrix does not have (symmetric) tropical rank at most two.
class NotRankTwo : public Error {
 public:
  using Error::Error;
};

/// The matrix has symmetric tropical rank one; its tree is a degenerate star.
class RankOneInput : public Error {
 public:
  using Error::Error;
};

}  // namespace symbic
