#pragma once

#include <stdexcept>
#include <string>

namespace symsolve {

// Bad caller input: non-finite entries, size mismatches, unknown names.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerically degenerate data: rank deficiency, loss of positive definiteness.
class degeneracy_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural identity that should hold by construction failed beyond
// tolerance (e.g. a matrix that must block-diagonalize does not).
class structure_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace symsolve
