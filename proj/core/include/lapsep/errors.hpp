#pragma once

#include <stdexcept>
#include <string>

namespace lapsep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroTraceError : Error {
  using Error::Error;
};
struct DimensionMismatchError : Error {
  using Error::Error;
};
struct NonBinaryWeightsError : Error {
  using Error::Error;
};
struct OutOfRangeError : Error {
  using Error::Error;
};
struct NotBipartiteDimsError : Error {
  using Error::Error;
};
struct PreconditionUnmetError : Error {
  using Error::Error;
};
struct TrivialGraphError : Error {
  using Error::Error;
};
struct CompleteGraphError : Error {
  using Error::Error;
};
struct NegativeWeightError : Error {
  using Error::Error;
};
struct NotDiagonallyDominantError : Error {
  using Error::Error;
};
struct TooLargeError : Error {
  using Error::Error;
};
struct BadGraph6Error : Error {
  using Error::Error;
};
struct UnknownNameError : Error {
  using Error::Error;
};

}  // namespace lapsep
