#ifndef RINGSPREAD_CIRCLE_STATE_HPP
#define RINGSPREAD_CIRCLE_STATE_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace ringspread {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Largest |m| any builder is allowed to produce.
inline constexpr int kMaxAngularMomentum = 512;

/// Tolerance on |sum |c_m|^2 - 1| accepted without rescaling.
inline constexpr double kNormTolerance = 1e-12;

/// Reduces an angle into [-pi, pi).
double reduce_angle(double phi);

/**
 * Pure state of a particle on the circle, stored as a truncated series over
 * the angular-momentum eigenbasis:
 *
 *   psi(phi) = sum_{m = m_min}^{m_max} c_m exp(i m phi) / sqrt(2 pi).
 *
 * Instances are immutable and always normalized.
 */
class CircleState {
 public:
  /// Takes coefficients c_{m_min}, c_{m_min+1}, ...; throws NormalizationError
  /// when the norm deviates from 1 by more than kNormTolerance.
  CircleState(int m_min, std::vector<complex> coefficients, std::string label = {});

  /// Same as the constructor but rescales the coefficients to unit norm.
  static CircleState normalized(int m_min, std::vector<complex> coefficients,
                                std::string label = {});

  int m_min() const { return m_min_; }
  int m_max() const { return m_min_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const complex> coefficients() const { return coeffs_; }
  const std::string& label() const { return label_; }

  /// c_m, or zero outside the stored range.
  complex coefficient(int m) const;

  /// Largest harmonic present in the density |psi|^2, i.e. m_max - m_min.
  int density_bandwidth() const { return m_max() - m_min_; }

  /// psi(phi); the argument is reduced into [-pi, pi) first.
  complex evaluate(double phi) const;

  /// |psi(phi)|^2.
  double density(double phi) const;

  CircleState with_label(std::string label) const;

 private:
  int m_min_;
  std::vector<complex> coeffs_;
  std::string label_;
};

/// psi_m(phi) = exp(i m phi) / sqrt(2 pi).
CircleState make_eigenstate(int m);

enum class TrigPhase { Sin, Cos };

/// sin(k phi)/sqrt(pi) or cos(k phi)/sqrt(pi), k >= 1.
CircleState make_trig(int harmonic, TrigPhase phase);

/**
 * Coherent state on the circle, the eigenstate of
 * Z = exp(-l_z + 1/2) U(phi) with eigenvalue xi = exp(l + i theta).
 *
 * Convention: c_m ~ xi^{-m} exp(-m^2 / 2). The density peaks at phi = theta
 * and <l_z> is close to -l. The m-range is chosen so that the dropped tail
 * probability stays below 1e-14.
 */
CircleState make_coherent(double l, double theta);

/// Normalized |xi> - |-xi>; only odd m survive.
CircleState make_cat(double l, double theta);

/// psi(phi) ~ (offset + sin^2 phi)^2, expanded exactly over |m| <= 4.
CircleState make_density_poly(double offset);

/**
 * Builds a state from samples psi(phi_j) on the uniform grid
 * phi_j = 2 pi j / N, j = 0..N-1, by discrete Fourier analysis. The Nyquist
 * term of an even-sized grid is split evenly between m = +N/2 and m = -N/2.
 */
CircleState make_from_samples(std::span<const complex> samples);

/// c_m -> c_m exp(-i m theta0); the density moves from p(phi) to p(phi - theta0).
CircleState rotate(const CircleState& state, double theta0);

/// Drops every |m| > mmax and renormalizes.
CircleState truncate(const CircleState& state, int mmax);

}  // namespace ringspread

#endif  // RINGSPREAD_CIRCLE_STATE_HPP
