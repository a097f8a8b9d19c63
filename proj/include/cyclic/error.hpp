#pragma once

#include <stdexcept>
#include <string>

namespace cyclic {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (negative length,
/// spherical radius past pi/2, north-pole projection, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class GeometryMismatch : public Error {
public:
    using Error::Error;
};

class DuplicateAngle : public Error {
public:
    using Error::Error;
};

/// Wrong vertex count for the requested construction.
class ArityError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// No cyclic polygon exists with the requested side lengths.
class InfeasibleSides : public Error {
public:
    using Error::Error;
};

/// The half-chord system has a root, but it needs s(2r) > 1, which no
/// circle on the unit sphere provides.
class SphericalInfeasible : public InfeasibleSides {
public:
    using InfeasibleSides::InfeasibleSides;
};

class NotConverged : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace cyclic
