#pragma once

#include <stdexcept>
#include <string>

namespace qcs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// State-spec parameters outside their stated domain (negative n_bar, M < 1, ...).
struct InvalidSpec : Error {
    using Error::Error;
};

// Mathematically well-formed input that is not a quantum state (det V < 1,
// negative eigenvalue, trace off unity).
struct Unphysical : Error {
    using Error::Error;
};

struct CutoffTooSmall : Error {
    using Error::Error;
};

struct StepTooLarge : Error {
    using Error::Error;
};

struct QuadratureNotConverged : Error {
    using Error::Error;
};

struct GridTooCoarse : Error {
    using Error::Error;
};

struct NotApplicable : Error {
    using Error::Error;
};

struct RootNotBracketed : Error {
    using Error::Error;
};

struct UnsupportedFamily : Error {
    using Error::Error;
};

}  // namespace qcs
