#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace adelic {

/// Raised when an argument lies outside the domain of an operation
/// (zero where Q^x is required, a composite "prime", a degenerate map, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a numeric evaluation lands within tolerance of a pole.
class pole_error : public domain_error {
public:
    pole_error(const std::string& what, std::complex<double> location)
        : domain_error(what), location_(location) {}

    std::complex<double> location() const noexcept { return location_; }

private:
    std::complex<double> location_;
};

}  // namespace adelic
