// errors.hpp - Exception hierarchy shared by all triarm components.
#ifndef TRIARM_ERRORS_HPP
#define TRIARM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace triarm {

/// A parameter is outside its mathematical domain (sigma <= 0, alpha
/// outside (0, 0.5), sample size < 2, ...).
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical routine cannot deliver its accuracy contract (non-PSD
/// correlation, quadrature budget exhausted, zero pooled variance).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent run configuration; carries the offending field.
class config_error : public std::runtime_error {
public:
    config_error(const std::string& field, const std::string& what)
        : std::runtime_error("config field '" + field + "': " + what), field_(field) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// The success target cannot be met inside the sample-size bounds.
/// Carries the best success probability attainable at the bound corner.
class infeasible_error : public std::runtime_error {
public:
    infeasible_error(const std::string& what, double max_achievable)
        : std::runtime_error(what), max_achievable_(max_achievable) {}
    double max_achievable() const noexcept { return max_achievable_; }

private:
    double max_achievable_;
};

} // namespace triarm

#endif
