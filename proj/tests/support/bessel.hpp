#pragma once

#include <cmath>
#include <stdexcept>

// Independent oracle for the heat kernel of the integer line.  Kept away
// from the library: the only shared ingredient is std::exp.

namespace testsupport {

// Modified Bessel function of the first kind, integer order nu >= 0, by the
// ascending power series I_nu(z) = sum_m (z/2)^(2m+nu) / (m! (m+nu)!).
inline double bessel_i(int nu, double z) {
  if (nu < 0) throw std::invalid_argument("bessel_i: negative order");
  double term = 1.0;
  for (int k = 1; k <= nu; ++k) term *= (z / 2.0) / static_cast<double>(k);
  double sum = term;
  const double quarter_z2 = z * z / 4.0;
  for (int m = 1; m <= 400; ++m) {
    term *= quarter_z2 / (static_cast<double>(m) * static_cast<double>(m + nu));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

// Heat kernel of the integer line: p(t, j, k) = e^{-2t} I_{|j-k|}(2t).
inline double line_heat_kernel(double t, long long j, long long k) {
  const long long d = j > k ? j - k : k - j;
  return std::exp(-2.0 * t) * bessel_i(static_cast<int>(d), 2.0 * t);
}

}  // namespace testsupport
