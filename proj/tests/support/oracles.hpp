#ifndef RINGSPREAD_TESTS_ORACLES_HPP
#define RINGSPREAD_TESTS_ORACLES_HPP

// Independent reference computations. Nothing here calls into the windowed
// moment engine or the library quadrature.

#include <cmath>
#include <complex>

#include "ringspread/circle_state.hpp"

namespace ringspread::testing {

inline constexpr double kPiSq = kPi * kPi;

/// |psi(phi)|^2 summed directly from the coefficients.
inline double oracle_density(const CircleState& s, double phi) {
  std::complex<double> sum{};
  for (int m = s.m_min(); m <= s.m_max(); ++m) {
    sum += s.coefficient(m) * std::complex<double>(std::cos(m * phi), std::sin(m * phi));
  }
  return std::norm(sum) / (2.0 * kPi);
}

/// Composite Simpson rule with `intervals` (even) subintervals.
template <typename F>
double simpson(F&& f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

struct OracleWindow {
  double mean;
  double variance;
};

/// Brute-force window mean and variance of phi over [phi0 - pi, phi0 + pi].
inline OracleWindow oracle_window(const CircleState& s, double phi0, int intervals = 8000) {
  const double a = phi0 - kPi;
  const double b = phi0 + kPi;
  const double norm = simpson([&](double x) { return oracle_density(s, x); }, a, b, intervals);
  const double mean = simpson([&](double x) { return x * oracle_density(s, x); }, a, b, intervals) / norm;
  const double var =
      simpson([&](double x) { return (x - mean) * (x - mean) * oracle_density(s, x); }, a, b, intervals) / norm;
  return {mean, var};
}

/// Im G(phi0) from integrating Im[conj(-i psi') (phi - M) psi] by parts:
/// pi p(phi0 + pi) - 1/2.
inline double oracle_im_g(const CircleState& s, double phi0) { return kPi * oracle_density(s, phi0 + kPi) - 0.5; }

// Closed forms for psi_s = sin(phi)/sqrt(pi), obtained from the elementary
// integrals of phi sin^2(phi) and phi^2 sin^2(phi) over [phi0 - pi, phi0 + pi].
inline double psi_s_mean(double phi0) { return phi0 - std::sin(2 * phi0) / 2; }
inline double psi_s_variance(double phi0) {
  const double s2 = std::sin(2 * phi0);
  return kPiSq / 3 - std::cos(2 * phi0) / 2 - s2 * s2 / 4;
}

// Same for psi_s2 = sin(2 phi)/sqrt(pi).
inline double psi_s2_mean(double phi0) { return phi0 - std::sin(4 * phi0) / 4; }
inline double psi_s2_variance(double phi0) {
  const double s4 = std::sin(4 * phi0);
  return kPiSq / 3 - std::cos(4 * phi0) / 8 - s4 * s4 / 16;
}

}  // namespace ringspread::testing

#endif  // RINGSPREAD_TESTS_ORACLES_HPP
