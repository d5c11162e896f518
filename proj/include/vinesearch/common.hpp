#pragma once

#include <stdexcept>
#include <string>

namespace vinesearch {

//! boundary clamp for copula-scale arguments
inline constexpr double unit_eps = 1e-10;

inline double clamp_unit(double u)
{
  if (u < unit_eps)
    return unit_eps;
  if (u > 1.0 - unit_eps)
    return 1.0 - unit_eps;
  return u;
}

//! invalid option or flag combination (CLI exit code 2)
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

//! unusable input data (CLI exit code 3)
class DataError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

//! numerical failure, e.g. a non-converging inversion (CLI exit code 4)
class NumericError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace vinesearch
