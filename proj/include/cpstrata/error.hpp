#pragma once

#include <stdexcept>
#include <string>

namespace cpstrata {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in lattices / tables of different sizes.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Argument outside the supported domain (n out of range, bad weights, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

// A structural check on a model (d^2, ideal stability, homogeneity) failed.
class ModelError : public Error {
public:
    using Error::Error;
};

}  // namespace cpstrata
