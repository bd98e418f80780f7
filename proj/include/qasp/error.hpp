// SPDX-License-Identifier: MIT
#ifndef QASP_ERROR_HPP
#define QASP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qasp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed program text. Carries the 1-based location of the offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string expected, std::string found);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }
    [[nodiscard]] const std::string& expected() const noexcept { return expected_; }
    [[nodiscard]] const std::string& found() const noexcept { return found_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
    std::string found_;
};

/// A rule contains a variable that no positive literal binds.
class SafetyError : public Error {
public:
    SafetyError(std::string rule, std::string variable);

    [[nodiscard]] const std::string& rule() const noexcept { return rule_; }
    [[nodiscard]] const std::string& variable() const noexcept { return variable_; }

private:
    std::string rule_;
    std::string variable_;
};

/// Ground program violates a structural requirement of the solver.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Exhaustive search would exceed the configured atom budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

class NoQuestionError : public Error {
public:
    NoQuestionError() : Error("no question given and the program has no question/1 facts") {}
};

class NoModelError : public Error {
public:
    using Error::Error;
};

class ArityError : public Error {
public:
    using Error::Error;
};

} // namespace qasp

#endif
