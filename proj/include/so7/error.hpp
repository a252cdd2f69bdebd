#pragma once

#include <stdexcept>
#include <string>

namespace so7 {

// Thrown for user-facing failures: bad CLI input, unknown group ids,
// corrupt cache files, precondition violations on public entry points.
// Internal invariant breakage uses assert / InternalError instead.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check between two independent computations disagreed.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace so7
