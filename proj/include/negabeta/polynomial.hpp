#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "negabeta/numeric.hpp"

namespace negabeta {

// Dense univariate polynomial over Q, coefficients in ascending degree order.
// The zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& a) { return Poly(std::vector<Rat>{a}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
  }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;

  // Euclidean division; second component is the remainder.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly derivative() const;
  Poly monic() const;

  Rat eval(const Rat& x) const;
  Real eval_real(const Real& x) const;
  CReal eval_creal(const CReal& x) const;

  // Range of the polynomial over [lo, hi] by interval Horner; the result
  // brackets every value the polynomial takes on the interval.
  std::pair<Rat, Rat> eval_interval(const Rat& lo, const Rat& hi) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

Poly poly_gcd(Poly a, Poly b);
Poly squarefree_part(const Poly& p);

// Upper bound on the absolute value of every complex root.
Rat cauchy_root_bound(const Poly& p);

// Sturm chain of a squarefree polynomial.
std::vector<Poly> sturm_chain(const Poly& p);

// Number of distinct real roots in (lo, hi], from a precomputed chain.
int sturm_count(const std::vector<Poly>& chain, const Rat& lo, const Rat& hi);

// Disjoint isolating intervals (lo, hi], one real root each, sorted
// ascending. Requires a squarefree polynomial. Rational roots may land
// exactly on an interval endpoint (always the right one).
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& p);

// Narrow an isolating interval of p below the given width. The interval must
// contain exactly one real root of p, with sign(p(lo)) != sign(p(hi)) or the
// root exactly at an endpoint.
std::pair<Rat, Rat> refine_root_interval(const Poly& p, Rat lo, Rat hi,
                                         const Rat& width);

}  // namespace negabeta
