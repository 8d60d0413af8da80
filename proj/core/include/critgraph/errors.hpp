#pragma once

#include <stdexcept>
#include <string>

namespace critgraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// lattice_quotient called with gens_B not contained in the lattice of gens_A
struct ContainmentViolation : Error {
    using Error::Error;
};

// primary decomposition / sylow of a group with free rank > 0
struct InfiniteGroup : Error {
    using Error::Error;
};

// matrix does not define a homomorphism of presented groups
struct NotAHomomorphism : Error {
    using Error::Error;
};

// composite of the two maps handed to complex_homology is not zero
struct NotAComplex : Error {
    using Error::Error;
};

// malformed input data (graphs, tables, JSON, parameters)
struct ValidationError : Error {
    using Error::Error;
};

// closed-form formula applied outside its hypotheses
struct HypothesisViolated : Error {
    using Error::Error;
};

// brute-force enumeration would exceed the configured column cap
struct CapExceeded : Error {
    using Error::Error;
};

} // namespace critgraph
