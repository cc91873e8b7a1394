#pragma once

// Thin binary128 layer (gcc __float128 + libquadmath). The coefficient
// quadrature and contour extraction run here: those sums cancel by factors up
// to ~1e22, which double precision cannot absorb.

#include <quadmath.h>

#include <complex>

#include "hardy/scaled.hpp"

namespace hardy::qf {

using qreal = __float128;

struct qcomplex {
  qreal re = 0;
  qreal im = 0;

  qcomplex() = default;
  qcomplex(qreal r, qreal i = 0) : re(r), im(i) {}
  explicit qcomplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  friend qcomplex operator+(const qcomplex& a, const qcomplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend qcomplex operator-(const qcomplex& a, const qcomplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend qcomplex operator*(const qcomplex& a, const qcomplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend qcomplex operator*(qreal s, const qcomplex& a) { return {s * a.re, s * a.im}; }
  friend qcomplex operator*(const qcomplex& a, qreal s) { return {a.re * s, a.im * s}; }
  friend qcomplex operator/(const qcomplex& a, qreal s) { return {a.re / s, a.im / s}; }
  friend qcomplex operator/(const qcomplex& a, const qcomplex& b) {
    const qreal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend qcomplex operator-(const qcomplex& a) { return {-a.re, -a.im}; }
  qcomplex& operator+=(const qcomplex& b) { re += b.re; im += b.im; return *this; }
  qcomplex& operator*=(const qcomplex& b) { *this = *this * b; return *this; }
};

inline qreal qabs(const qcomplex& z) { return hypotq(z.re, z.im); }
inline qcomplex qconj(const qcomplex& z) { return {z.re, -z.im}; }

/// exp of a complex argument; the real part may reach +-11000 (binary128 range).
inline qcomplex qexp(const qcomplex& z) {
  const qreal e = expq(z.re);
  return {e * cosq(z.im), e * sinq(z.im)};
}

inline qcomplex qpolar(qreal mag, qreal ang) { return {mag * cosq(ang), mag * sinq(ang)}; }

inline qcomplex qsqrt(const qcomplex& z) {
  // principal branch
  const qreal m = qabs(z);
  const qreal a = atan2q(z.im, z.re) / 2;
  return qpolar(sqrtq(m), a);
}

inline ScaledComplex to_scaled(const qcomplex& z) {
  if (z.re == 0 && z.im == 0) return ScaledComplex::zero();
  return ScaledComplex::from_ln_phase(static_cast<double>(logq(qabs(z))),
                                      static_cast<double>(atan2q(z.im, z.re)));
}

inline std::complex<double> to_cd(const qcomplex& z) {
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

}  // namespace hardy::qf
