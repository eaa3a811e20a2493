#pragma once

#include <stdexcept>
#include <string>

namespace mricap {

// Bad inputs, schema violations, contract violations by callers. CLI exit 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant (failed solver certificate, residual blowup). CLI exit 3.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

// perfect MRI is zero: the system has no marginal shortfall. CLI exit 4.
class AccreditationUndefined : public std::runtime_error {
 public:
  explicit AccreditationUndefined(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mricap
