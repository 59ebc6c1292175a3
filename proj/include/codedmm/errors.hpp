#ifndef CODEDMM_ERRORS_HPP
#define CODEDMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace codedmm {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class IndivisibleDimension : public Error {
public:
    using Error::Error;
};

class NonPositiveScale : public Error {
public:
    using Error::Error;
};

class DuplicatePoints : public Error {
public:
    using Error::Error;
};

class InsufficientEvaluations : public Error {
public:
    using Error::Error;
};

class InvalidSampleSize : public Error {
public:
    using Error::Error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class InfiniteVariance : public Error {
public:
    using Error::Error;
};

class NotEnoughWorkers : public Error {
public:
    using Error::Error;
};

class InvalidThreshold : public Error {
public:
    using Error::Error;
};

// Raised when a custom sampling distribution assigns zero probability to a
// subset whose block-sum is nonzero: the estimator would be silently biased.
class BiasWarning : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace codedmm

#endif // CODEDMM_ERRORS_HPP
