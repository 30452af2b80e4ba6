#pragma once

#include <stdexcept>
#include <string>

namespace wsnfire {

/// Invalid model, layout or scenario parameters (bad configuration).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// An argument outside the mathematical domain of a law or model.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Statistics requested from a sample that cannot support them.
class EstimatorError : public std::runtime_error {
public:
    explicit EstimatorError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wsnfire
