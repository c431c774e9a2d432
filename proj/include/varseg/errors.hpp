#pragma once

#include <stdexcept>
#include <string>

namespace varseg {

/// Raised for malformed or non-ingestible input data (CSV defects,
/// non-finite values, unwritable output paths).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive search is refused because its estimated
/// combination count exceeds the cost guard and no force flag was set.
class CostGuardError : public std::runtime_error {
public:
    CostGuardError(const std::string& message, double combinations)
        : std::runtime_error(message), combinations_(combinations) {}

    double combinations() const noexcept { return combinations_; }

private:
    double combinations_;
};

} // namespace varseg
