#pragma once

#include <stdexcept>

namespace rlpbwt {

/// Malformed input: panels, patterns, interval lists.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable, truncated or corrupt files.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rlpbwt
