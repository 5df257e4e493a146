#pragma once

#include <stdexcept>
#include <string>

namespace riderlab {

/** Invalid argument or violated precondition: zero move vectors, duplicate
 *  directions, empty pieces, malformed boards, out-of-range parameters.
 *  The CLI maps this to exit code 2. */
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/** A search exceeded its solved-systems budget. CLI exit code 3. */
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/** A constructed linear system turned out inconsistent or rank-deficient
 *  where a unique solution was required. */
class ConstructionFailureError : public std::runtime_error {
public:
    explicit ConstructionFailureError(const std::string& what) : std::runtime_error(what) {}
};

/** A count table is too short for the requested fit or period scan. */
class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

/** No period up to the requested bound fits the data. */
class NoPeriodError : public std::runtime_error {
public:
    explicit NoPeriodError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace riderlab
