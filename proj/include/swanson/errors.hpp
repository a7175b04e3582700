#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swanson {

// Invalid input: non-finite entries, dimension mismatch, bad configuration.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A parameter-domain precondition is violated (negative radicand, eta != -epsilon gate).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An iterative method did not converge. Carries the best iterates and their residuals.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& msg,
                              std::vector<std::complex<double>> iterates = {},
                              std::vector<double> residuals = {})
        : std::runtime_error(msg),
          iterates_(std::move(iterates)),
          residuals_(std::move(residuals)) {}

    const std::vector<std::complex<double>>& iterates() const noexcept { return iterates_; }
    const std::vector<double>& residuals() const noexcept { return residuals_; }

private:
    std::vector<std::complex<double>> iterates_;
    std::vector<double> residuals_;
};

}  // namespace swanson
