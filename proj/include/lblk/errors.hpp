#pragma once
#include <stdexcept>
#include <string>

namespace lblk {

// Mismatched bit-lengths, wrong subkey counts, out-of-range parameters.
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

// A requested enumeration exceeds the configured work cap.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed container bytes (bad magic, version, truncation).
class format_error : public std::runtime_error {
public:
    explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lblk
