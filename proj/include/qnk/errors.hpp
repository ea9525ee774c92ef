#pragma once

#include <stdexcept>
#include <string>

namespace qnk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// theta series cap reached before the tail bound was met
struct TruncationOverflow : Error {
    using Error::Error;
};

// eta lies in (or numerically too close to) the excluded set where a
// w-denominator vanishes
struct SingularEta : Error {
    using Error::Error;
};

// the classical modular identity for vartheta needs ab and cd even
struct ParityViolation : Error {
    using Error::Error;
};

// u does not map one lattice onto the other
struct NotALatticeIso : Error {
    using Error::Error;
};

// u*eta1 - eta2 is not a lattice point of the target lattice
struct EtaMismatch : Error {
    using Error::Error;
};

// the Schur system did not have a one-dimensional solution space
struct NoIntertwiner : Error {
    using Error::Error;
};

// Heisenberg elements of different orders combined
struct MixedN : Error {
    using Error::Error;
};

// relation spaces on the two sides of an isomorphism check have different ranks
struct RankMismatch : Error {
    using Error::Error;
};

// too few entries survive the proportionality cutoff to compare anything
struct DegenerateOverlap : Error {
    using Error::Error;
};

// composed cocycle disagrees with the measured transformation ratio
struct CocycleMismatch : Error {
    using Error::Error;
};

// invalid suite configuration (bad coprimality, tau too low, ...)
struct ConfigError : Error {
    using Error::Error;
};

} // namespace qnk
