#pragma once

#include <stdexcept>
#include <string>

namespace netmix {

/// Raised on malformed inputs: bad file contents, dimension mismatches,
/// out-of-range parameters. CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation produces or would produce non-finite values.
/// CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace netmix
