#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <utility>

namespace hardy {

/// Complex value stored as (log magnitude, phase) so that quantities like
/// e^{-nt}, 2^n n! and (e/2n)^{n/2} stay representable far outside double range.
struct ScaledComplex {
  double ln_mag = 0.0;   // natural log of the modulus; meaningless when is_zero
  double phase = 0.0;    // radians in (-pi, pi]
  bool is_zero = true;

  static ScaledComplex zero() { return {}; }
  static ScaledComplex from_ln_phase(double ln, double ph);
  static ScaledComplex from_complex(std::complex<double> v);
  static ScaledComplex from_real(double v);

  std::complex<double> to_complex() const;
  double abs() const;        // e^{ln_mag}; underflows/overflows double outside its range
  double log10_abs() const;
  // Real part assuming the value is real-phased (phase 0 or pi); exact signs.
  double to_real() const;

  bool operator==(const ScaledComplex& o) const;
};

/// Real value as (log magnitude, sign in {-1,0,+1}).
struct ScaledReal {
  double ln_mag = 0.0;
  int sign = 0;

  static ScaledReal zero() { return {}; }
  static ScaledReal from_ln(double ln, int sign = 1) { return {ln, sign}; }
  static ScaledReal from_double(double v);
  double to_double() const;
  ScaledComplex to_scaled_complex() const;
  bool is_zero() const { return sign == 0; }
};

/// Normalize an angle into (-pi, pi].
double normalize_phase(double p);

/// e^{ip}; exact at the four axis phases 0, +-pi/2, pi so real/imaginary
/// pipelines do not pick up spurious components.
std::complex<double> unit_phasor(double p);

ScaledComplex sc_mul(const ScaledComplex& x, const ScaledComplex& y);
ScaledComplex sc_add(const ScaledComplex& x, const ScaledComplex& y);
ScaledComplex sc_neg(const ScaledComplex& x);
ScaledComplex sc_sub(const ScaledComplex& x, const ScaledComplex& y);
ScaledComplex sc_scale(const ScaledComplex& x, std::complex<double> c);
// |x| as a scaled real-phased value.
ScaledComplex sc_abs(const ScaledComplex& x);

inline ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) { return sc_mul(a, b); }
inline ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) { return sc_add(a, b); }
inline ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) { return sc_sub(a, b); }

/// Sum of terms given as (ln magnitude, phase), factored around the largest
/// magnitude in a single pass pair. Empty input or full cancellation gives zero.
ScaledComplex accumulate_scaled(std::span<const std::pair<double, double>> ln_phase_terms);

}  // namespace hardy
