#pragma once

#include <stdexcept>
#include <string>

namespace unimodal {

// Invalid input: nonpositive parts, malformed markings, out-of-domain arguments.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Work refused because it would exceed a configured budget (memory, term count).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Curve evaluated outside its support, or at a pole.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Requested object does not exist (count is zero).
class ImpossibleInstanceError : public std::runtime_error {
public:
    explicit ImpossibleInstanceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace unimodal
