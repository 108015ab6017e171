#ifndef MWAVE_ERRORS_HPP
#define MWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mwave
{
    struct Error : std::runtime_error
    {
        explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    };

    /// Config/expression text could not be parsed. Carries 1-based position.
    struct ParseError : Error
    {
        int line = 0;
        int column = 0;
        ParseError(const std::string& msg, int line_, int col_)
            : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
              line(line_), column(col_) {}
    };

    /// An input violates a structural invariant (named in the message).
    struct ValidationError : Error
    {
        using Error::Error;
    };

    /// Point lies outside the region where the requested quantity is defined.
    struct DomainError : Error
    {
        using Error::Error;
    };

    /// A Carleman-weight denominator is not positive; indicates eps*R >= 1.
    struct DegenerateDenominator : Error
    {
        using Error::Error;
    };

    struct NotOnBoundary : Error
    {
        using Error::Error;
    };

    /// Boundary moves at or above wave speed (minus the safety margin).
    struct LuminalBoundary : Error
    {
        using Error::Error;
    };

    struct CFLViolation : Error
    {
        using Error::Error;
    };

    struct UnstableBlowup : Error
    {
        int step = -1;
        UnstableBlowup(const std::string& msg, int step_)
            : Error(msg + " at step " + std::to_string(step_)), step(step_) {}
    };

    /// Trial field does not vanish on the Dirichlet part of the boundary.
    struct BoundaryConditionViolation : Error
    {
        using Error::Error;
    };
} // namespace mwave

#endif
