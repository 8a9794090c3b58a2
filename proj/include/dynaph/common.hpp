#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dynaph {

// Malformed or inconsistent inputs (bad files, mismatched simplex sets, ...).
// The CLI maps these to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A decomposition invariant (I1/I2) or an internal contract was violated.
// The CLI maps these to exit code 3.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw invariant_error(msg);
}

}  // namespace dynaph
