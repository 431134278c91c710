#ifndef MISANNEAL_ERRORS_HPP
#define MISANNEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace misanneal {

// Base error with a short machine-readable code; the CLI maps codes to exit
// statuses (parse errors -> 2, everything else -> 1).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed input text or invalid argument values.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("parse", message) {}
};

// Basis enumeration aborted; carries the count found before hitting the cap.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& message, std::size_t count_so_far)
        : Error("cap_exceeded", message), count_so_far_(count_so_far) {}
    std::size_t count_so_far() const noexcept { return count_so_far_; }

private:
    std::size_t count_so_far_;
};

// Iterative solver or integrator failed to meet its tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(std::string code, const std::string& message)
        : Error(std::move(code), message) {}
};

}  // namespace misanneal

#endif
