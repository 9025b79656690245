#pragma once

#include <stdexcept>
#include <string>

namespace c2 {

// Product or transfer would leave the subring {1, g, e, xi, e^-m kappa, tau(iota^-2k)}.
struct UnsupportedSubring : std::domain_error {
    explicit UnsupportedSubring(const std::string& what) : std::domain_error("outside supported subring: " + what) {}
};

struct ArithmeticOverflow : std::overflow_error {
    explicit ArithmeticOverflow(const std::string& what) : std::overflow_error("integer overflow in " + what) {}
};

// A rewrite produced something the normal form cannot hold. Always a kernel bug.
struct NormalFormFailure : std::logic_error {
    explicit NormalFormFailure(const std::string& what) : std::logic_error("normal form failure: " + what) {}
};

struct DegreeMismatch : std::invalid_argument {
    explicit DegreeMismatch(const std::string& what) : std::invalid_argument("degree mismatch: " + what) {}
};

struct ContextViolation : std::invalid_argument {
    explicit ContextViolation(const std::string& what) : std::invalid_argument("context violated: " + what) {}
};

struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace c2
