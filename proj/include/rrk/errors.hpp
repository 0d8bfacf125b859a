#ifndef RRK_ERRORS_HPP
#define RRK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rrk {

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : NumericError {
    using NumericError::NumericError;
};

struct TailBoundViolated : NumericError {
    using NumericError::NumericError;
};

struct BadBracket : NumericError {
    using NumericError::NumericError;
};

struct DomainError : NumericError {
    using NumericError::NumericError;
};

struct OutOfRange : NumericError {
    using NumericError::NumericError;
};

struct PoleError : NumericError {
    using NumericError::NumericError;
};

struct DivergentIntegral : NumericError {
    using NumericError::NumericError;
};

} // namespace rrk

#endif
