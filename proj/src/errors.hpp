#pragma once

#include <stdexcept>
#include <string>

namespace wlat {

// Bad user input: unsupported type, malformed rational, basis mismatch.
struct InvalidArgument : std::runtime_error {
  explicit InvalidArgument(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation exceeds the configured truncation; the message
// names the bound that would be required.
struct LimitExceeded : std::runtime_error {
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency assertion failed (engine bug, not user error).
struct InternalCheck : std::logic_error {
  explicit InternalCheck(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalCheck(what);
}

}  // namespace wlat
