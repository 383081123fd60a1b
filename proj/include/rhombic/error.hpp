#pragma once

#include <stdexcept>
#include <string>

namespace rhombic {

// Every library failure derives from Error so callers can catch one type.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Evaluation of a negative power at zero.
class DomainError : public Error {
    using Error::Error;
};

// An exhaustive enumeration would exceed its size guard.
class CapacityError : public Error {
    using Error::Error;
};

// Malformed combinatorial object (bad tiling, bad filling, bad assemblée...).
class ValidityError : public Error {
    using Error::Error;
};

// JSON input that does not match the expected schema.
class FormatError : public Error {
    using Error::Error;
};

class InvalidFlip : public Error {
    using Error::Error;
};

// Object does not live on the rhombic diagram it was paired with.
class ShapeError : public Error {
    using Error::Error;
};

class ParameterError : public Error {
    using Error::Error;
};

// The Markov generator has a null space of dimension > 1.
class StructureError : public Error {
    using Error::Error;
};

} // namespace rhombic
