#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

/// Base class for all library failures.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated a documented precondition (bad n, bad window, ...).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

/// Evaluation requested exactly at a pole of the function.
class pole_error : public error {
public:
    explicit pole_error(const std::string& what) : error(what) {}
};

/// An iteration failed to converge within its budget.
class convergence_error : public error {
public:
    explicit convergence_error(const std::string& what) : error(what) {}
};

/// A quantity required to be nonzero (derivative, variance, ...) vanished.
class degenerate_error : public error {
public:
    explicit degenerate_error(const std::string& what) : error(what) {}
};

/// A consistency cross-check between two independent computations failed.
class crosscheck_error : public error {
public:
    explicit crosscheck_error(const std::string& what) : error(what) {}
};

} // namespace zetalab
