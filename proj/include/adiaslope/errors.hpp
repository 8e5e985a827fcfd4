#ifndef ADIASLOPE_ERRORS_HPP
#define ADIASLOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adiaslope {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidRing : Error {
  using Error::Error;
};
struct RingMismatch : Error {
  using Error::Error;
};
struct NonDivisorTwist : Error {
  using Error::Error;
};
struct UnsupportedDimension : Error {
  using Error::Error;
};
struct RankMismatch : Error {
  using Error::Error;
};
struct DegenerateVolume : Error {
  using Error::Error;
};
struct UnsupportedRank : Error {
  using Error::Error;
};
struct UnsupportedOrder : Error {
  using Error::Error;
};
struct NonDecreasingWeights : Error {
  using Error::Error;
};
struct SchemaError : Error {
  using Error::Error;
};
struct SemanticError : Error {
  using Error::Error;
};

}  // namespace adiaslope

#endif
