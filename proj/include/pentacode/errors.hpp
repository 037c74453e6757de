#ifndef PENTACODE_ERRORS_HPP
#define PENTACODE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pentacode {

struct NotPrimeError : std::invalid_argument {
    explicit NotPrimeError(std::uint64_t p)
        : std::invalid_argument("p = " + std::to_string(p) + " is not prime") {}
};

struct BadResidueError : std::invalid_argument {
    explicit BadResidueError(std::uint64_t p)
        : std::invalid_argument("p = " + std::to_string(p) + " is not congruent to 1 mod 4") {}
};

struct DivideByZeroError : std::domain_error {
    DivideByZeroError() : std::domain_error("division by zero") {}
};

struct BothZeroError : std::domain_error {
    BothZeroError() : std::domain_error("gcd of two zero polynomials") {}
};

struct ZeroPolyDegreeError : std::logic_error {
    ZeroPolyDegreeError() : std::logic_error("degree of the zero polynomial is undefined") {}
};

struct ZeroConstantTermError : std::invalid_argument {
    ZeroConstantTermError() : std::invalid_argument("reciprocal requires a nonzero constant term") {}
};

struct TooManyDivisorsError : std::runtime_error {
    explicit TooManyDivisorsError(std::uint64_t count)
        : std::runtime_error("divisor count " + std::to_string(count) + " exceeds the cap"),
          count(count) {}
    std::uint64_t count;
};

struct LengthMismatchError : std::invalid_argument {
    LengthMismatchError() : std::invalid_argument("vector lengths differ") {}
};

struct ZeroCodeError : std::invalid_argument {
    ZeroCodeError() : std::invalid_argument("the zero code is not representable") {}
};

struct ZeroDualError : std::invalid_argument {
    ZeroDualError() : std::invalid_argument("the dual code is the zero code") {}
};

struct BudgetExceededError : std::runtime_error {
    BudgetExceededError() : std::runtime_error("codeword count exceeds the enumeration budget") {}
};

struct DistanceInconclusiveError : std::runtime_error {
    explicit DistanceInconclusiveError(unsigned w_cap)
        : std::runtime_error("no dependent column set of size <= " + std::to_string(w_cap)),
          w_cap(w_cap) {}
    unsigned w_cap;
};

// component index is 1-based where present, 0 when not applicable
struct NotADivisorError : std::invalid_argument {
    explicit NotADivisorError(unsigned component = 0)
        : std::invalid_argument(component
                                    ? "g_" + std::to_string(component) + " does not divide x^n - 1"
                                    : "the generator does not divide x^n - 1"),
          component(component) {}
    unsigned component;
};

struct DegreeTooLargeError : std::invalid_argument {
    explicit DegreeTooLargeError(unsigned component)
        : std::invalid_argument("message degree too large in component " + std::to_string(component)),
          component(component) {}
    unsigned component;
};

struct NotDualContainingError : std::invalid_argument {
    NotDualContainingError() : std::invalid_argument("the code does not contain its dual") {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument("parse error: " + what) {}
};

}  // namespace pentacode

#endif
