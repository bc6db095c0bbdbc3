#pragma once

#include <stdexcept>
#include <string>

namespace czframe {

// Raised when a discretization parameter falls below what the working grid resolves.
class ResolutionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GridMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedKernel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// T1 / T*1 window tail estimate exceeded the requested tolerance.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace czframe
