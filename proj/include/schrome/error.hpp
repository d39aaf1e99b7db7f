#pragma once

#include <stdexcept>
#include <string>

namespace schrome {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: empty facets, unknown vertices or builtins, bad parameters,
// disconnected family members. CLI exit code 1.
struct InvalidInput : Error {
    using Error::Error;
};

// An enumeration guard tripped (brute-force space, lattice size, vertex count).
// Lifted by setting SCHROME_GUARD_OVERRIDE in the environment.
struct GuardExceeded : Error {
    using Error::Error;
};

// Two routes that must agree did not. CLI exit code 2.
struct VerificationError : Error {
    using Error::Error;
};

bool guard_override();

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidInput(msg);
}

// Throws GuardExceeded unless the override env var is set.
void guard(bool cond, const std::string& msg);

}  // namespace schrome
