#pragma once

#include <stdexcept>
#include <string>

namespace algshift {

/// Input violates an operation's precondition (malformed value, wrong class of ideal, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A B-sequence that no universal squarefree lexsegment ideal realizes.
class NotRealizable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The Gin engine could not certify its result (trial disagreement, lost stability,
/// Hilbert function mismatch, a Phi-image escaping the ambient ring).
class GinError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proved identity failed on concrete data. Always a bug somewhere.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace algshift
