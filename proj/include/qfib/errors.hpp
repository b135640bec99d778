#pragma once

#include <stdexcept>
#include <string>

namespace qfib {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("polynomial division by zero") {}
};

struct NonUnitLeadingCoefficient : std::domain_error {
    NonUnitLeadingCoefficient()
        : std::domain_error("divisor leading coefficient must be +1 or -1") {}
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct ModulusMismatch : std::invalid_argument {
    ModulusMismatch() : std::invalid_argument("residues have different modulus indices") {}
};

struct ZeroPolynomial : std::invalid_argument {
    ZeroPolynomial() : std::invalid_argument("operation undefined for the zero polynomial") {}
};

struct UnknownClaim : std::invalid_argument {
    explicit UnknownClaim(const std::string& name)
        : std::invalid_argument("unknown claim: " + name) {}
};

struct BoundTooLarge : std::invalid_argument {
    BoundTooLarge(const std::string& claim, unsigned long bound, unsigned long limit)
        : std::invalid_argument("bound " + std::to_string(bound) + " for " + claim +
                                " exceeds soft limit " + std::to_string(limit) +
                                " (pass the override flag to force)") {}
};

}  // namespace qfib
