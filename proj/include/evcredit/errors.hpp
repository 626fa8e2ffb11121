#pragma once

#include <stdexcept>
#include <string>

namespace evcredit {

// Bad input data or parameters: malformed files, broken partitions,
// out-of-domain values. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / stream failures. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace evcredit
