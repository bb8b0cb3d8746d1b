#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hygirth {

// Domain error with a stable machine-readable name (printed by the CLI on
// exit code 1). Parse/IO problems use ParseError and map to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& message) {
    throw Error(std::move(name), message);
}

}  // namespace hygirth
