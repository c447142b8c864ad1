#pragma once

#include <stdexcept>
#include <string>

namespace mixspec {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural invariant broken: weights, domains, variable sets, determinism.
class validation_error : public error {
public:
    using error::error;
};

// Operation needs a consistent mixed system and got one with no admissible mass.
class inconsistent_error : public error {
public:
    using error::error;
};

class resolver_exhausted : public error {
public:
    using error::error;
};

// Enumeration would exceed the configured bound.
class bound_exceeded : public error {
public:
    using error::error;
};

} // namespace mixspec
