#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mbs {

// Base class for every error raised by the library. Catching this at the
// CLI boundary maps to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedGraph : Error {
    using Error::Error;
};
struct DisconnectedSubgraph : Error {
    using Error::Error;
};
struct EmptySubset : Error {
    using Error::Error;
};
struct SizeMismatch : Error {
    using Error::Error;
};
struct InvalidGraph : Error {
    using Error::Error;
};
struct InvalidWeight : Error {
    using Error::Error;
};
struct InvalidMetric : Error {
    using Error::Error;
};
struct DegenerateTriple : Error {
    using Error::Error;
};
struct TrichotomyViolation : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct TooSmall : Error {
    using Error::Error;
};
struct NotTight : Error {
    using Error::Error;
};
struct PathIsGeodesic : Error {
    using Error::Error;
};
struct PathNotInduced : Error {
    using Error::Error;
};
struct BadEpsilon : Error {
    using Error::Error;
};
struct IsBlockGraph : Error {
    using Error::Error;
};
struct NotDistanceHereditary : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    std::uint64_t nodes_explored;

    BudgetExceeded(const std::string& what, std::uint64_t nodes)
        : Error(what), nodes_explored(nodes) {}
};

// Malformed input file; carries a line number for diagnostics.
struct ParseError : Error {
    int line;

    explicit ParseError(const std::string& what, int line_number = 0)
        : Error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + what : what),
          line(line_number) {}
};

}  // namespace mbs
