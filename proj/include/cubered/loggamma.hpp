#pragma once

#include <cmath>
#include <stdexcept>

#if defined(__GLIBC__) || defined(__APPLE__)
extern "C" double lgamma_r(double, int*);
#define CUBERED_HAVE_LGAMMA_R 1
#endif

namespace cubered {

/// log Gamma(x) for x > 0. Delegates to the platform lgamma — a Lanczos-class
/// rational approximation in the common libms, comfortably past the 13
/// significant digits needed on [1e-6, 100]; the test suite pins it against a
/// 256-digit reference. The reentrant form avoids the signgam global so
/// concurrent Monte Carlo sampling stays race-free.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be > 0");
#ifdef CUBERED_HAVE_LGAMMA_R
  int sign = 0;
  return lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

}  // namespace cubered
