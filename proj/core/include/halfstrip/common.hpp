#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace halfstrip {

using cplx = std::complex<double>;
using ComplexFn = std::function<cplx(cplx)>;

inline constexpr double kPi = 3.14159265358979323846;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Point outside the declared domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Evaluation at a pole, a branch point or on the contour itself.
class SingularityError : public Error {
public:
    using Error::Error;
};

// Integrand produced a non-finite sample.
class EvaluationError : public Error {
public:
    using Error::Error;
};

// Declared tail bound does not dominate the integrand, or the tail diverges.
class TruncationError : public Error {
public:
    using Error::Error;
};

class InversionError : public Error {
public:
    using Error::Error;
};

class LookupError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

enum class Side { Plus, Minus };

std::string to_string(Side side);
std::string format_complex(cplx z);

}  // namespace halfstrip
