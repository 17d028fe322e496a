#pragma once

#include <stdexcept>

namespace gaucode {

// Error taxonomy shared across the library. The CLI maps these onto its exit
// codes: InputError/DimensionError/PreconditionError -> 2, CapacityError -> 3.

class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UndefinedDistanceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace gaucode
