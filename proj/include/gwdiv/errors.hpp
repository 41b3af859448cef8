#pragma once

#include <stdexcept>
#include <string>

namespace gwdiv {

// Scenario / input validation failures (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quadrature or iteration did not reach the requested tolerance (CLI exit code 3).
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double achieved_tol, double requested_tol)
        : std::runtime_error(what + " (achieved " + std::to_string(achieved_tol) +
                             ", requested " + std::to_string(requested_tol) + ")"),
          achieved_tol_(achieved_tol),
          requested_tol_(requested_tol) {}

    double achieved_tol() const noexcept { return achieved_tol_; }
    double requested_tol() const noexcept { return requested_tol_; }

private:
    double achieved_tol_;
    double requested_tol_;
};

} // namespace gwdiv
