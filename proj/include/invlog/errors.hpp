#ifndef INVLOG_ERRORS_HPP
#define INVLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invlog
{

/// Raised when an argument breaks an operation's precondition
/// (order or mode mismatch, sequence too short, ...).
class ContractViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Raised when an input lies outside the mathematical domain of an
/// operation (non-normalized series, nonzero constant term, |g| > 1, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

} // namespace invlog

#endif
