#pragma once

#include <stdexcept>

namespace semdef {

/// Family parameters outside their definitions, or malformed input.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters for which no labeling or bound is known (open residues).
class UnsupportedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A construction input violates a checked precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction produced a labeling that failed verification. Indicates a
/// bug; never caught internally.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The search would exceed the configured label limit.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace semdef
