#ifndef MCT_ERRORS_HPP
#define MCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mct {

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Malformed input text. position() is a byte offset into the input.
class parse_error : public error {
public:
    parse_error(const std::string& what_arg, std::size_t position)
        : error(what_arg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

/// A configured size or budget cap was exceeded.
class size_error : public error {
public:
    using error::error;
};

/// A named fixture failed one of its self-validation checks.
class fixture_validation_error : public error {
public:
    using error::error;
};

} // namespace mct

#endif
