#ifndef THETACOL_ERRORS_HPP
#define THETACOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thetacol
{

/// Malformed input: bad shape, bad JSON, violated precondition of an operation.
class InputError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A search ran past its configured node budget. Distinct from "no solution".
class BudgetExceeded : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a pair search exhausts a space that the existence theorems
/// say must contain a solution. Should never fire.
class TheoremFalsified : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

/// Two independent computations of the same quantity disagreed.
class InternalError : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

} // namespace thetacol

#endif // THETACOL_ERRORS_HPP
