#include "hardy/scaled.hpp"

#include <algorithm>
#include <limits>

namespace hardy {

namespace {
constexpr double kPi = 3.14159265358979323846;
// Residual magnitudes below this fraction of the factored scale collapse to
// the zero element; prevents spurious -inf logs after exact cancellation.
constexpr double kCancelFloor = 1e-300;
}  // namespace

double normalize_phase(double p) {
  double r = std::remainder(p, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

std::complex<double> unit_phasor(double p) {
  if (p == 0.0) return {1.0, 0.0};
  if (p == kPi) return {-1.0, 0.0};
  if (p == kPi / 2) return {0.0, 1.0};
  if (p == -kPi / 2) return {0.0, -1.0};
  return {std::cos(p), std::sin(p)};
}

ScaledComplex ScaledComplex::from_ln_phase(double ln, double ph) {
  ScaledComplex r;
  r.ln_mag = ln;
  r.phase = normalize_phase(ph);
  r.is_zero = false;
  return r;
}

ScaledComplex ScaledComplex::from_complex(std::complex<double> v) {
  if (v.real() == 0.0 && v.imag() == 0.0) return zero();
  double im = v.imag() == 0.0 ? 0.0 : v.imag();  // canonicalize -0
  ScaledComplex r;
  r.ln_mag = std::log(std::abs(v));
  r.phase = std::atan2(im, v.real());
  r.is_zero = false;
  return r;
}

ScaledComplex ScaledComplex::from_real(double v) {
  if (v == 0.0) return zero();
  ScaledComplex r;
  r.ln_mag = std::log(std::fabs(v));
  r.phase = v < 0 ? kPi : 0.0;
  r.is_zero = false;
  return r;
}

std::complex<double> ScaledComplex::to_complex() const {
  if (is_zero) return {0.0, 0.0};
  return std::exp(ln_mag) * unit_phasor(phase);
}

double ScaledComplex::abs() const { return is_zero ? 0.0 : std::exp(ln_mag); }

double ScaledComplex::log10_abs() const {
  return ln_mag / 2.302585092994045684;  // ln 10
}

double ScaledComplex::to_real() const {
  if (is_zero) return 0.0;
  double m = std::exp(ln_mag);
  return phase == kPi ? -m : (phase == 0.0 ? m : m * std::cos(phase));
}

bool ScaledComplex::operator==(const ScaledComplex& o) const {
  if (is_zero || o.is_zero) return is_zero == o.is_zero;
  return ln_mag == o.ln_mag && phase == o.phase;
}

ScaledReal ScaledReal::from_double(double v) {
  if (v == 0.0) return zero();
  return {std::log(std::fabs(v)), v < 0 ? -1 : 1};
}

double ScaledReal::to_double() const { return sign == 0 ? 0.0 : sign * std::exp(ln_mag); }

ScaledComplex ScaledReal::to_scaled_complex() const {
  if (sign == 0) return ScaledComplex::zero();
  return ScaledComplex::from_ln_phase(ln_mag, sign < 0 ? kPi : 0.0);
}

ScaledComplex sc_mul(const ScaledComplex& x, const ScaledComplex& y) {
  if (x.is_zero || y.is_zero) return ScaledComplex::zero();
  return ScaledComplex::from_ln_phase(x.ln_mag + y.ln_mag, x.phase + y.phase);
}

ScaledComplex sc_add(const ScaledComplex& x, const ScaledComplex& y) {
  if (x.is_zero) return y;
  if (y.is_zero) return x;
  const double scale = std::max(x.ln_mag, y.ln_mag);
  std::complex<double> s = std::exp(x.ln_mag - scale) * unit_phasor(x.phase) +
                           std::exp(y.ln_mag - scale) * unit_phasor(y.phase);
  const double m = std::abs(s);
  if (!(m >= kCancelFloor)) return ScaledComplex::zero();
  double im = s.imag() == 0.0 ? 0.0 : s.imag();
  return ScaledComplex::from_ln_phase(scale + std::log(m), std::atan2(im, s.real()));
}

ScaledComplex sc_neg(const ScaledComplex& x) {
  if (x.is_zero) return x;
  return ScaledComplex::from_ln_phase(x.ln_mag, x.phase + kPi);
}

ScaledComplex sc_sub(const ScaledComplex& x, const ScaledComplex& y) { return sc_add(x, sc_neg(y)); }

ScaledComplex sc_scale(const ScaledComplex& x, std::complex<double> c) {
  return sc_mul(x, ScaledComplex::from_complex(c));
}

ScaledComplex sc_abs(const ScaledComplex& x) {
  if (x.is_zero) return x;
  return ScaledComplex::from_ln_phase(x.ln_mag, 0.0);
}

ScaledComplex accumulate_scaled(std::span<const std::pair<double, double>> terms) {
  double scale = -std::numeric_limits<double>::infinity();
  for (const auto& [ln, ph] : terms) scale = std::max(scale, ln);
  if (!std::isfinite(scale)) return ScaledComplex::zero();
  std::complex<double> s{0.0, 0.0};
  for (const auto& [ln, ph] : terms) s += std::exp(ln - scale) * unit_phasor(ph);
  const double m = std::abs(s);
  if (!(m >= kCancelFloor)) return ScaledComplex::zero();
  double im = s.imag() == 0.0 ? 0.0 : s.imag();
  return ScaledComplex::from_ln_phase(scale + std::log(m), std::atan2(im, s.real()));
}

}  // namespace hardy
