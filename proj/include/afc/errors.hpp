#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afc {

// Invalid parameters or inputs that violate an operation's contract.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Grid/bandwidth/horizon too coarse or too short for the requested result.
struct resolution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Least-squares comb fit could not find a periodic structure.
struct fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed CSV input; carries the 1-based line number.
struct csv_error : std::runtime_error {
    std::size_t line;
    csv_error(std::size_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace afc
