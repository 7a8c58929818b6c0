#pragma once

#include <stdexcept>

namespace rdegen {

/// Malformed argument values: bad sizes, ranges, or textual encodings.
class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Richardson interval [v, w] was requested with v not <= w,
/// i.e. the variety is empty and there is nothing to compute.
class empty_richardson_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested computation exceeds a configured capability bound
/// (for instance the oracle degree limit).
class capability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Row-sorting a tableau produced a column violation, so no
/// semistandard normal form exists.
class normalization_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A minimum-weight search found the minimum attained twice.
class uniqueness_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rdegen
