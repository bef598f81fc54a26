#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twcst {

/// Keys are 1-based positions in the ordered key set.
using Key = int;

/// Weights and costs are exact integers.
using Weight = std::int64_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define TWCST_ERROR(Name)                                                   \
    class Name : public Error {                                             \
    public:                                                                 \
        using Error::Error;                                                 \
        const char* kind() const noexcept override { return #Name; }        \
    }

TWCST_ERROR(InvalidInstance);
TWCST_ERROR(InvalidTree);
TWCST_ERROR(EmptySet);
TWCST_ERROR(NoSuchTree);
TWCST_ERROR(ContainmentViolation);
TWCST_ERROR(MaxWeightTooSmall);
TWCST_ERROR(SubcaseUnreachable);
TWCST_ERROR(InvalidRange);
TWCST_ERROR(TooManyKeys);
TWCST_ERROR(IoError);

#undef TWCST_ERROR

/// An inequality that holds for optimal trees failed on the given input.
class PreconditionViolated : public Error {
public:
    PreconditionViolated(std::string inequality, std::string location)
        : Error("precondition violated: " + inequality + " at " + location),
          inequality_(std::move(inequality)), location_(std::move(location)) {}

    const char* kind() const noexcept override { return "PreconditionViolated"; }
    const std::string& inequality() const noexcept { return inequality_; }
    const std::string& location() const noexcept { return location_; }

private:
    std::string inequality_;
    std::string location_;
};

}  // namespace twcst
