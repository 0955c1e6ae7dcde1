#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starpi {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Field construction rejected (characteristic 2, non prime power, unknown name, ...).
class InvalidFieldError : public Error {
public:
    using Error::Error;
};

// Two elements (or polynomials) from different field descriptors were combined.
class DescriptorMismatchError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

// Enumeration requested over an infinite field.
class InfiniteFieldError : public Error {
public:
    using Error::Error;
};

// A substitution image has the wrong symmetry for its variable.
class SymmetryViolationError : public Error {
public:
    SymmetryViolationError(const std::string& variable, const std::string& msg)
        : Error(msg), variable_(variable) {}
    const std::string& variable() const { return variable_; }

private:
    std::string variable_;
};

// Text input rejected; position is a 0-based byte offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& msg)
        : Error(msg + " (at offset " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

class UnknownVariableError : public Error {
public:
    using Error::Error;
};

class MissingAssignmentError : public Error {
public:
    using Error::Error;
};

// Evaluation mode incompatible with the field (e.g. exhaustive over Q).
class ModeFieldMismatchError : public Error {
public:
    using Error::Error;
};

// A degree bound too small to contain the requested object.
class BoundTooSmallError : public Error {
public:
    using Error::Error;
};

// Vectors from different word universes were mixed.
class UniverseMismatchError : public Error {
public:
    using Error::Error;
};

// Candidate basis fails to complement the identity space of a slice.
class BasisNotComplementaryError : public Error {
public:
    BasisNotComplementaryError(const std::string& msg, std::size_t sliceDim,
                               std::size_t identityDim, std::size_t basisCount,
                               std::size_t jointRank)
        : Error(msg), sliceDim_(sliceDim), identityDim_(identityDim),
          basisCount_(basisCount), jointRank_(jointRank) {}
    std::size_t sliceDim() const { return sliceDim_; }
    std::size_t identityDim() const { return identityDim_; }
    std::size_t basisCount() const { return basisCount_; }
    std::size_t jointRank() const { return jointRank_; }

private:
    std::size_t sliceDim_ = 0, identityDim_ = 0, basisCount_ = 0, jointRank_ = 0;
};

class MissingParameterError : public Error {
public:
    using Error::Error;
};

// Parameters p and q do not satisfy q = p^k.
class InconsistentPQError : public Error {
public:
    using Error::Error;
};

} // namespace starpi
