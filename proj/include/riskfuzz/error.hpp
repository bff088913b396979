#pragma once

#include <stdexcept>
#include <string>

namespace riskfuzz {

// Input data violates a schema, range, or structural invariant.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / stream failure while reading or writing.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace riskfuzz
