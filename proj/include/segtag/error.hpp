#pragma once

#include <stdexcept>
#include <string>

namespace segtag {

// Errors caused by user input (bad files, bad flags, incompatible models).
// The CLI maps these to exit code 2; anything else is an internal failure
// and maps to exit code 1.
class UserError : public std::runtime_error {
public:
    explicit UserError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public UserError {
public:
    using UserError::UserError;
};

class IoError : public UserError {
public:
    using UserError::UserError;
};

class ConfigError : public UserError {
public:
    using UserError::UserError;
};

class ModelError : public UserError {
public:
    using UserError::UserError;
};

}  // namespace segtag
