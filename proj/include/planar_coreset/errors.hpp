#ifndef PLANAR_CORESET_ERRORS_HPP_
#define PLANAR_CORESET_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace planar_coreset {

/// Malformed or inconsistent input: bad vertex ids, nonpositive weights,
/// disconnected instances where connectivity is required, unparsable files.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation refused to run because the instance exceeds a configured
/// size cap (exhaustive searches and enumerations guard themselves this way).
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace planar_coreset

#endif  // PLANAR_CORESET_ERRORS_HPP_
