#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mimic {

// Bad user input: malformed files, invalid parameters, violated preconditions
// on public entry points. CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exhaustive-enumeration guard was exceeded. The caller must switch modes
// or shrink the instance; the verifier never silently samples. Exit code 3.
struct GuardRefusal : std::runtime_error {
    explicit GuardRefusal(const std::string& msg) : std::runtime_error(msg) {}
};

// A randomized construction failed its certification budget. Carries the seed
// so the failure is reproducible. Exit code 4.
struct RandomizedFailure : std::runtime_error {
    RandomizedFailure(const std::string& msg, uint64_t seed)
        : std::runtime_error(msg + " (seed " + std::to_string(seed) + ")"), seed(seed) {}
    uint64_t seed;
};

// Broken internal invariant; always a bug, never a user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace mimic
