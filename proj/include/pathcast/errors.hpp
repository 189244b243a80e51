#ifndef PATHCAST_ERRORS_HPP_
#define PATHCAST_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pathcast {

// Error classes map 1:1 onto CLI exit codes: usage -> 1, input -> 2,
// planning -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class PlanningError : public Error {
public:
    using Error::Error;
    PlanningError(const std::string& stage, const std::string& message)
        : Error(stage + ": " + message) {}
};

}  // namespace pathcast

#endif  // PATHCAST_ERRORS_HPP_
