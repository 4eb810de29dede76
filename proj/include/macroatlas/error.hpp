#pragma once

#include <stdexcept>
#include <string>

namespace macroatlas {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter or argument violates a model invariant. field() names the offender.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& what)
        : Error(what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class SolverError : public Error {
public:
    enum class Kind { NonBracketing, NoConvergence, SingularJacobian, NoCrossing };

    SolverError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace macroatlas
