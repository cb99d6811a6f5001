#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace iwcert {

// Two independent computations of the same quantity disagreed, or a
// theoretically guaranteed invariant failed to hold. Always a bug in this
// library (or a broken toolchain), never bad user input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// The requested configuration is outside what the implemented theorems
// cover (e.g. a Kida computation for a splitting type we have no formula
// for). Distinct from a domain_error: the input is well-formed, we just
// do not support it.
struct UnsupportedConfiguration : std::domain_error {
    using std::domain_error::domain_error;
};

// A derivation step's mathematical premise does not hold for the given
// data. Carries the premise's name so callers (and the verifier's failure
// reports) can say exactly which hypothesis broke.
struct PremiseError : std::runtime_error {
    PremiseError(std::string premise_name, const std::string& detail)
        : std::runtime_error(premise_name + ": " + detail),
          premise(std::move(premise_name)) {}

    std::string premise;
};

// Malformed certificate input (bad JSON, missing keys, non-decimal integer
// strings, unknown enumeration tags). The message includes the location.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace iwcert
