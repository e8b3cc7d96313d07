#pragma once

#include <stdexcept>

namespace fq {

// Invalid parameters, arity or base-set mismatches, unresolved names.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed or out-of-domain input data (CSV cells, zero denominators, ...).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation refused: a computation size cap would be exceeded, or a required
// capability (e.g. a cardinality signature) is absent.
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fq
