#pragma once

#include <stdexcept>
#include <string>

namespace satura {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class InvalidModulus : public Error {
public:
    using Error::Error;
};

class ZeroInversion : public Error {
public:
    ZeroInversion() : Error("inverse of zero") {}
};

class DenominatorVanishes : public Error {
public:
    explicit DenominatorVanishes(unsigned long long p)
        : Error("denominator vanishes modulo " + std::to_string(p)), prime(p) {}
    unsigned long long prime;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class ExponentOverflow : public Error {
public:
    ExponentOverflow() : Error("monomial exponent exceeds 16 bits") {}
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

class UnknownVariable : public Error {
public:
    UnknownVariable(const std::string& name, std::size_t pos)
        : Error("unknown variable '" + name + "' at position " + std::to_string(pos)),
          name(name), position(pos) {}
    std::string name;
    std::size_t position;
};

class NotZeroDimensional : public Error {
public:
    NotZeroDimensional() : Error("ideal is not zero-dimensional") {}
};

class PrimeTooSmall : public Error {
public:
    using Error::Error;
};

class GeneratorVanishesModP : public Error {
public:
    using Error::Error;
};

class OrderNotDegreeCompatible : public Error {
public:
    OrderNotDegreeCompatible() : Error("monomial order is not degree compatible") {}
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class SingularSubmatrix : public Error {
public:
    SingularSubmatrix() : Error("selected Veronese submatrix is singular") {}
};

class Timeout : public Error {
public:
    Timeout() : Error("computation exceeded its time limit") {}
};

} // namespace satura
