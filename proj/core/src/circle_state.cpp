#include "ringspread/circle_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ringspread/errors.hpp"

namespace ringspread {

namespace {

const double kInvSqrtTwoPi = 1.0 / std::sqrt(kTwoPi);

// Coherent-state terms with (m + l)^2 above this are dropped; the discarded
// probability is then far below 1e-14.
constexpr double kCoherentLogCut = 42.0;

double norm_squared(std::span<const complex> c) {
  double s = 0.0;
  for (const auto& z : c) s += std::norm(z);
  return s;
}

void check_m_range(int m_min, int m_max) {
  if (m_min < -kMaxAngularMomentum || m_max > kMaxAngularMomentum) {
    throw ParameterRangeError("angular-momentum range [" + std::to_string(m_min) + ", " +
                              std::to_string(m_max) + "] exceeds the cap |m| <= " +
                              std::to_string(kMaxAngularMomentum));
  }
}

// Strips leading/trailing coefficients with modulus <= tol.
std::pair<int, std::vector<complex>> trim(int m_min, std::vector<complex> c, double tol) {
  std::size_t first = 0;
  while (first < c.size() && std::abs(c[first]) <= tol) ++first;
  std::size_t last = c.size();
  while (last > first && std::abs(c[last - 1]) <= tol) --last;
  std::vector<complex> out(c.begin() + static_cast<std::ptrdiff_t>(first),
                           c.begin() + static_cast<std::ptrdiff_t>(last));
  return {m_min + static_cast<int>(first), std::move(out)};
}

}  // namespace

double reduce_angle(double phi) {
  double r = std::fmod(phi + kPi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  r -= kPi;
  // fmod can land exactly on +pi after the shift back.
  if (r >= kPi) r -= kTwoPi;
  return r;
}

CircleState::CircleState(int m_min, std::vector<complex> coefficients, std::string label)
    : m_min_(m_min), coeffs_(std::move(coefficients)), label_(std::move(label)) {
  if (coeffs_.empty()) throw DegenerateStateError("circle state needs at least one coefficient");
  check_m_range(m_min_, m_max());
  const bool any_nonzero =
      std::any_of(coeffs_.begin(), coeffs_.end(), [](const complex& z) { return std::abs(z) > 1e-15; });
  if (!any_nonzero) throw DegenerateStateError("all coefficients vanish");
  for (const auto& z : coeffs_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalDomainError("non-finite coefficient");
    }
  }
  const double n2 = norm_squared(coeffs_);
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw NormalizationError("sum |c_m|^2 = " + std::to_string(n2) + " differs from 1");
  }
}

CircleState CircleState::normalized(int m_min, std::vector<complex> coefficients, std::string label) {
  const double n2 = norm_squared(coefficients);
  if (!(n2 > 1e-30) || !std::isfinite(n2)) {
    throw DegenerateStateError("cannot normalize a state of norm " + std::to_string(std::sqrt(n2)));
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& z : coefficients) z *= scale;
  return CircleState(m_min, std::move(coefficients), std::move(label));
}

complex CircleState::coefficient(int m) const {
  if (m < m_min_ || m > m_max()) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(m - m_min_)];
}

complex CircleState::evaluate(double phi) const {
  const double x = reduce_angle(phi);
  complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int m = m_min_ + static_cast<int>(i);
    sum += coeffs_[i] * std::polar(1.0, m * x);
  }
  return sum * kInvSqrtTwoPi;
}

double CircleState::density(double phi) const { return std::norm(evaluate(phi)); }

CircleState CircleState::with_label(std::string label) const {
  CircleState copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

CircleState make_eigenstate(int m) {
  if (std::abs(m) > kMaxAngularMomentum) {
    throw ParameterRangeError("eigenstate index |m| = " + std::to_string(std::abs(m)) +
                              " exceeds cap " + std::to_string(kMaxAngularMomentum));
  }
  return CircleState(m, {complex{1.0, 0.0}}, "eigenstate(m=" + std::to_string(m) + ")");
}

CircleState make_trig(int harmonic, TrigPhase phase) {
  if (harmonic < 1) throw ParameterRangeError("trig harmonic must be >= 1");
  if (harmonic > kMaxAngularMomentum) throw ParameterRangeError("trig harmonic exceeds cap");
  const double h = 1.0 / std::sqrt(2.0);
  const std::size_t size = 2 * static_cast<std::size_t>(harmonic) + 1;
  std::vector<complex> c(size, complex{0.0, 0.0});
  // sin(k phi)/sqrt(pi) = (-i e^{ik phi} + i e^{-ik phi}) / sqrt(2) / sqrt(2 pi)
  if (phase == TrigPhase::Sin) {
    c.front() = complex{0.0, h};
    c.back() = complex{0.0, -h};
  } else {
    c.front() = complex{h, 0.0};
    c.back() = complex{h, 0.0};
  }
  const std::string name = (phase == TrigPhase::Sin ? "sin" : "cos");
  return CircleState(-harmonic, std::move(c), name + "(" + std::to_string(harmonic) + " phi)");
}

CircleState make_coherent(double l, double theta) {
  if (!std::isfinite(l) || !std::isfinite(theta)) throw ParameterRangeError("coherent parameters must be finite");
  if (std::abs(l) > 10.0) throw ParameterRangeError("coherent state needs |l| <= 10");
  // |c_m|^2 ~ exp(-2 m l - m^2) = exp(l^2) exp(-(m + l)^2); the constant is dropped.
  const double reach = std::sqrt(kCoherentLogCut);
  const int lo = static_cast<int>(std::ceil(-l - reach));
  const int hi = static_cast<int>(std::floor(-l + reach));
  check_m_range(lo, hi);
  std::vector<complex> c;
  c.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int m = lo; m <= hi; ++m) {
    const double shifted = m + l;
    c.push_back(std::polar(std::exp(-0.5 * shifted * shifted), -m * theta));
  }
  return CircleState::normalized(lo, std::move(c),
                                 "coherent(l=" + std::to_string(l) + ", theta=" + std::to_string(theta) + ")");
}

CircleState make_cat(double l, double theta) {
  const CircleState cs = make_coherent(l, theta);
  // |-xi> has c_m(-xi) = (-1)^m c_m(xi): even terms cancel, odd terms double.
  std::vector<complex> c(cs.coefficients().begin(), cs.coefficients().end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int m = cs.m_min() + static_cast<int>(i);
    c[i] = (m % 2 == 0) ? complex{0.0, 0.0} : 2.0 * c[i];
  }
  if (std::sqrt(norm_squared(c)) < 1e-12) {
    throw DegenerateStateError("cat state |xi> - |-xi> cancels to zero norm");
  }
  return CircleState::normalized(cs.m_min(), std::move(c),
                                 "cat(l=" + std::to_string(l) + ", theta=" + std::to_string(theta) + ")");
}

CircleState make_density_poly(double offset) {
  if (!(offset > 0.0) || !std::isfinite(offset)) throw ParameterRangeError("density_poly offset must be > 0");
  // offset + sin^2 = b - (z^2 + z^-2)/4 with b = offset + 1/2, z = e^{i phi}; square it.
  const double b = offset + 0.5;
  std::vector<complex> c(9, complex{0.0, 0.0});
  c[0] = c[8] = 1.0 / 16.0;
  c[2] = c[6] = -b / 2.0;
  c[4] = b * b + 1.0 / 8.0;
  return CircleState::normalized(-4, std::move(c), "density_poly(offset=" + std::to_string(offset) + ")");
}

CircleState make_from_samples(std::span<const complex> samples) {
  const std::size_t n = samples.size();
  if (n < 4) throw ParameterRangeError("sample grid needs at least 4 nodes");
  if (std::all_of(samples.begin(), samples.end(), [](const complex& z) { return z == complex{}; })) {
    throw DegenerateStateError("all samples are zero");
  }
  const int half = static_cast<int>(n / 2);
  const bool even = n % 2 == 0;
  const int lo = -half;
  const int hi = half;

  std::vector<complex> twiddle(n);
  for (std::size_t r = 0; r < n; ++r) {
    twiddle[r] = std::polar(1.0, -kTwoPi * static_cast<double>(r) / static_cast<double>(n));
  }
  const double scale = std::sqrt(kTwoPi) / static_cast<double>(n);
  std::vector<complex> c;
  c.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int m = lo; m <= hi; ++m) {
    const auto mm = static_cast<std::size_t>(((m % static_cast<int>(n)) + static_cast<int>(n)) % static_cast<int>(n));
    complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) acc += samples[j] * twiddle[(mm * j) % n];
    acc *= scale;
    if (even && std::abs(m) == half) acc *= 0.5;
    c.push_back(acc);
  }
  const double n2 = norm_squared(c);
  if (!(n2 > 1e-30)) throw DegenerateStateError("sampled wavefunction has zero norm");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& z : c) z *= inv;
  auto [m_min, kept] = trim(lo, std::move(c), 1e-14);
  check_m_range(m_min, m_min + static_cast<int>(kept.size()) - 1);
  return CircleState::normalized(m_min, std::move(kept), "samples(N=" + std::to_string(n) + ")");
}

CircleState rotate(const CircleState& state, double theta0) {
  std::vector<complex> c(state.coefficients().begin(), state.coefficients().end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int m = state.m_min() + static_cast<int>(i);
    c[i] *= std::polar(1.0, -m * theta0);
  }
  return CircleState::normalized(state.m_min(), std::move(c), state.label());
}

CircleState truncate(const CircleState& state, int mmax) {
  if (mmax < 0) throw ParameterRangeError("truncation mmax must be >= 0");
  const int lo = std::max(state.m_min(), -mmax);
  const int hi = std::min(state.m_max(), mmax);
  if (lo > hi) throw DegenerateStateError("truncation to |m| <= " + std::to_string(mmax) + " removes every term");
  if (lo == state.m_min() && hi == state.m_max()) return state;
  std::vector<complex> c;
  for (int m = lo; m <= hi; ++m) c.push_back(state.coefficient(m));
  auto [m_min, kept] = trim(lo, std::move(c), 0.0);
  if (kept.empty()) throw DegenerateStateError("truncation to |m| <= " + std::to_string(mmax) + " removes every term");
  return CircleState::normalized(m_min, std::move(kept), state.label());
}

}  // namespace ringspread
