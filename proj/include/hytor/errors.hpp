#pragma once

#include <stdexcept>
#include <string>

namespace hytor {

// Invalid or inconsistent input: bad field order, malformed polynomial text,
// parameters outside the validated range, and similar caller mistakes.
class ParamError : public std::invalid_argument {
public:
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// Parameters are well formed but the requested quantity has no covered
// closed form or canonical family for this (s, d) combination.
class UnsupportedRegimeError : public ParamError {
public:
  explicit UnsupportedRegimeError(const std::string& what) : ParamError(what) {}
};

// A computation would exceed an explicit size or iteration budget.  The
// message names the guard so callers can raise it deliberately.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A value is outside the mathematical domain of an operation (division by
// zero, leading term of the zero polynomial, infinite footprint).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace hytor
