#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mersem {

// All failures carry a stable machine-readable code ("CyclicDag",
// "UnknownNode", ...) next to the human-readable message, so callers and
// tests dispatch on code() instead of parsing text.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Anything wrong with inputs the user hands us (config files, traces,
// flag values). The CLI maps these to exit status 1; everything else
// that escapes is a runtime failure and exits 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace mersem
