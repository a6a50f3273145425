#pragma once

#include <stdexcept>
#include <string>

namespace aastokes {

/// Invalid parameter or violated precondition.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced a non-finite value or a numerical check failed.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input data does not satisfy a structural requirement (missing samples,
/// uncovered temporal margin, non-solenoidal initial data, ...).
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace aastokes
