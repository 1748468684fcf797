#pragma once

#include <stdexcept>
#include <string>

namespace vc1 {

// Bad input values: malformed files, out-of-range indices, length mismatches.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Operation called outside its stated contract (e.g. compressing a
// non-realizable sample, or asking for a scheme on a class that shatters a pair).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An invariant the library itself guarantees was observed to fail.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace vc1
