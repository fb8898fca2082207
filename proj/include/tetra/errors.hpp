#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tetra {

// All recoverable failures carry a short machine-readable code
// ("RingMismatch", "ConvergenceViolation", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, const std::string& code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace tetra
