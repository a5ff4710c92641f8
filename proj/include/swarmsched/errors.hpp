#ifndef SWARMSCHED_ERRORS_HPP
#define SWARMSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swarmsched {

struct TimeoutExceeded : std::runtime_error {
    explicit TimeoutExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidWorkload : std::runtime_error {
    explicit InvalidWorkload(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyTrace : std::runtime_error {
    explicit EmptyTrace(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedKind : std::runtime_error {
    explicit UnsupportedKind(const std::string& what) : std::runtime_error(what) {}
};

struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidReference : std::runtime_error {
    explicit InvalidReference(const std::string& what) : std::runtime_error(what) {}
};

} // namespace swarmsched

#endif // SWARMSCHED_ERRORS_HPP
