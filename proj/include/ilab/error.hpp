#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ilab {

enum class ErrorKind {
    InvalidArgument,
    DuplicateGenerator,
    NonHomogeneousRelation,
    UnknownGenerator,
    InconsistentIntegral,
    UnderdeterminedIntegral,
    NameCollision,
    UnmappedGenerator,
    ActionNotDegreePreserving,
    ZeroVector,
    DimensionMismatch,
    IndexOutOfRange,
    AmbiguousRelation,
    UnknownSpace,
    NonDivisorClass,
    DegreeMismatch,
    ParameterNotCancelled,
    MissingPullback,
    ParseError,
    NameResolutionError,
    UnknownFormat,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace ilab
