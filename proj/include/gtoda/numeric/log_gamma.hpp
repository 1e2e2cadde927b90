#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gtoda::numeric {

using cplx = std::complex<double>;

struct GammaPoleError : std::domain_error {
  explicit GammaPoleError(cplx z) : std::domain_error(describe(z)), at(z) {}
  cplx at;

 private:
  static std::string describe(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << "Gamma function pole at z = " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
  }
};

namespace detail {

inline bool near_pole(cplx z) {
  if (z.real() > 0.5) return false;
  const double k = std::round(z.real());
  return k <= 0 && std::abs(z - cplx(k, 0)) < 1e-14 * std::max(1.0, std::abs(k));
}

// Stirling series, valid for Re z >= 15 (|z| large, away from the negative axis).
inline cplx stirling(cplx z) {
  static constexpr std::array<double, 10> kCoef = {
      1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188, -691.0 / 360360, 1.0 / 156, -3617.0 / 122400,
      43867.0 / 244188, -174611.0 / 125400};
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0, p = inv;
  for (double c : kCoef) {
    series += c * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * std::numbers::pi) + series;
}

// Upward recurrence: lnG(z) = lnG(z + m) - sum log(z + j). Principal branch throughout.
inline cplx log_gamma_recurrence(cplx z) {
  constexpr double kShiftTo = 15.0;
  cplx acc = 0.0;
  int m = 0;
  if (z.real() < kShiftTo) m = static_cast<int>(std::ceil(kShiftTo - z.real()));
  // Group factors into products to save logarithms; renormalize before overflow.
  cplx prod = 1.0;
  for (int j = 0; j < m; ++j) {
    prod *= z + static_cast<double>(j);
    if (std::abs(prod) > 1e200 || std::abs(prod) < 1e-200 || (j % 8) == 7) {
      acc += std::log(prod);
      prod = 1.0;
    }
  }
  acc += std::log(prod);
  const cplx lg = stirling(z + static_cast<double>(m));
  // The grouped logs agree with the sum of principal logs modulo 2 pi i; fix the branch
  // with the sum of arguments, which is exact up to rounding.
  double arg_sum = 0.0;
  for (int j = 0; j < m; ++j) arg_sum += std::arg(z + static_cast<double>(j));
  const double k = std::round((acc.imag() - arg_sum) / (2 * std::numbers::pi));
  acc -= cplx(0.0, 2 * std::numbers::pi * k);
  return lg - acc;
}

}  // namespace detail

/// Principal branch of ln Gamma(z): Stirling after upward recurrence, reflection for Re z < 1/2.
inline cplx log_gamma(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("log_gamma of a non-finite argument");
  if (detail::near_pole(z)) throw GammaPoleError(z);
  if (z.real() >= 0.5) return detail::log_gamma_recurrence(z);
  // ln G(z) = ln pi - ln sin(pi z) - ln G(1 - z), up to a multiple of 2 pi i fixed against
  // the continuous branch given by the recurrence's imaginary part.
  const double pi = std::numbers::pi;
  cplx log_sin;
  if (std::abs(z.imag()) > 30.0) {
    // sin(pi z) itself would overflow: factor out the dominant exponential.
    const double s = z.imag() > 0 ? 1.0 : -1.0;
    const cplx I(0, 1);
    log_sin = -s * I * pi * z + std::log(1.0 - std::exp(2.0 * s * I * pi * z)) - std::log(-2.0 * s * I);
  } else {
    const cplx s = std::sin(pi * z);
    if (std::abs(s) == 0.0) throw GammaPoleError(z);
    log_sin = std::log(s);
  }
  const cplx refl = std::log(pi) - log_sin - detail::log_gamma_recurrence(1.0 - z);
  const double branch = detail::log_gamma_recurrence(z).imag();
  const double k = std::round((refl.imag() - branch) / (2 * pi));
  return refl - cplx(0.0, 2 * pi * k);
}

inline bool is_gamma_pole(cplx z) { return detail::near_pole(z); }

inline cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

}  // namespace gtoda::numeric
