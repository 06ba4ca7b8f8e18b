#pragma once

#include <stdexcept>
#include <string>

namespace idf {

// Raised on malformed input files or invalid configuration. CLI exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an optimization run produces a non-finite loss. CLI exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg, int epoch_index = -1)
        : std::runtime_error(msg), epoch(epoch_index) {}
    int epoch;
};

}  // namespace idf
