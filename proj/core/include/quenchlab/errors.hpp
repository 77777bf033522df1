#pragma once

#include <stdexcept>
#include <string>

namespace quenchlab {

/// Base class for all quenchlab errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Invalid run or chain configuration (odd N, bad grid, unknown flag value).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Evaluation at a point where the expression is singular (closed gap).
class SingularityError : public Error {
public:
    explicit SingularityError(const std::string& msg) : Error(msg) {}
};

/// Ground state too close to degenerate for a perturbative sum.
class DegeneracyError : public Error {
public:
    DegeneracyError(const std::string& msg, double gap) : Error(msg), gap_(gap) {}
    double gap() const { return gap_; }

private:
    double gap_;
};

/// An iterative scheme failed to converge within its cap.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

/// Peak search found no interior maximum in the bracket.
class BracketError : public Error {
public:
    explicit BracketError(const std::string& msg) : Error(msg) {}
};

/// Malformed input to a fitting or collapse routine.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// Request exceeds a hard resource cap (matrix dimension).
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

/// File could not be opened or written.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace quenchlab
