#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latchem {

// Exit-code mapping used by the CLI: config 2, solver 3, capacity 4.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SolverError : std::runtime_error {
    double best_residual = 0.0;
    explicit SolverError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), best_residual(residual) {}
};

struct CapacityError : std::runtime_error {
    int64_t required = 0;
    CapacityError(const std::string& what, int64_t required_size)
        : std::runtime_error(what), required(required_size) {}
};

}  // namespace latchem
