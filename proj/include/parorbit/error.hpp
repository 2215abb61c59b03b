// Error types shared across the library.  The CLI maps them to exit codes,
// so keep the hierarchy flat and the categories disjoint.
#pragma once

#include <stdexcept>
#include <string>

namespace parorbit {

// Bad user input: unsupported type/rank, node out of range, malformed flags.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// The chosen node does not give an abelian nilradical.  Carries a witness
// root (a positive root of level >= 2 at that node) for the diagnostic.
struct NonAbelianError : std::runtime_error {
  NonAbelianError(const std::string& msg, std::string witness_root)
      : std::runtime_error(msg), witness(std::move(witness_root)) {}
  std::string witness;
};

// An internal cross-check failed (two computations of the same quantity
// disagree, or a table lookup is inconsistent with computed data).
struct ConsistencyError : std::logic_error {
  explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_consistent(bool ok, const std::string& msg) {
  if (!ok)
    throw ConsistencyError(msg);
}

}  // namespace parorbit
