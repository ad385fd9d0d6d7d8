#pragma once

#include <stdexcept>
#include <string>

namespace qfib {

struct DivisionByZeroError : std::domain_error {
    DivisionByZeroError() : std::domain_error("exact_div: divisor is the zero polynomial") {}
};

struct NonDivisibleError : std::domain_error {
    explicit NonDivisibleError(const std::string& what) : std::domain_error(what) {}
};

struct PoleAtZeroError : std::domain_error {
    explicit PoleAtZeroError(const std::string& what) : std::domain_error(what) {}
};

struct NonIntegralExponentError : std::domain_error {
    explicit NonIntegralExponentError(const std::string& what) : std::domain_error(what) {}
};

} // namespace qfib
