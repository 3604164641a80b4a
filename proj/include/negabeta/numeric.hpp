#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace negabeta {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

// Scoped override of the working float precision, given in bits.
// mpfr_float's knob is decimal digits, so convert (bits * log10(2), plus a
// small guard).
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits)
      : saved_(Real::default_precision()) {
    unsigned digits =
        static_cast<unsigned>(static_cast<double>(bits) * 0.30103) + 5;
    Real::default_precision(digits);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;  // truncates toward zero
  if ((num < 0) != (den < 0) && q * den != num) q -= 1;
  return q;
}

inline Int rat_floor(const Rat& q) {
  return floor_div(numerator(q), denominator(q));
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat r(1);
  Rat b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline Real to_real(const Rat& q) {
  return Real(numerator(q)) / Real(denominator(q));
}

inline double to_double(const Rat& q) {
  return static_cast<double>(to_real(q));
}

// Complex number over Real, just enough for polynomial root finding and
// numeric embeddings.
struct CReal {
  Real re, im;

  CReal() : re(0), im(0) {}
  CReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit CReal(const Rat& q) : re(to_real(q)), im(0) {}

  CReal operator+(const CReal& o) const { return {re + o.re, im + o.im}; }
  CReal operator-(const CReal& o) const { return {re - o.re, im - o.im}; }
  CReal operator*(const CReal& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CReal operator/(const CReal& o) const {
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  CReal& operator+=(const CReal& o) { *this = *this + o; return *this; }
  CReal& operator-=(const CReal& o) { *this = *this - o; return *this; }

  Real abs2() const { return re * re + im * im; }
  Real abs() const { return sqrt(abs2()); }
};

}  // namespace negabeta
