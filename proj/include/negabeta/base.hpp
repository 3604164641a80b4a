#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "negabeta/polynomial.hpp"
#include "negabeta/words.hpp"

namespace negabeta {

struct BaseOptions {
  // Interval refinement stops (with an error) once the enclosure is
  // narrower than 2^-precision_bits without the sign being decided.
  unsigned precision_bits = 4096;
  // Orbit iterations before an expansion is reported truncated.
  size_t orbit_budget = 10000;
  // Bits used for numeric embeddings (root values, point clouds).
  unsigned embed_bits = 128;
  // If set, pick this real root (>1), 0-based among ascending real roots,
  // instead of the largest one.
  std::optional<int> root_index;
};

class FieldElement;
struct BaseContext;
using BasePtr = std::shared_ptr<const BaseContext>;

// An algebraic base beta > 1: a designated real root of an integer
// polynomial. Arithmetic happens in Q[x]/(modulus); the isolating interval
// pins which root the symbol x denotes.
struct BaseContext {
  Poly modulus;              // monic over Q, squarefree, no root at 0 or -1
  std::vector<Int> modulus_int;  // primitive integer coefficients, ascending
  int degree = 0;
  Rat iso_lo, iso_hi;        // isolating interval for beta (may be a point)
  std::vector<Poly> sturm;   // chain of modulus
  BaseOptions opt;

  // caches (single-threaded use)
  mutable std::optional<Int> cache_floor_beta;
  mutable std::optional<bool> cache_beta_integer;
  mutable std::optional<DigitWord> cache_ref_l;
  mutable std::optional<DigitWord> cache_ref_r_star;
  mutable std::optional<DigitWord> cache_renyi;
  mutable std::optional<DigitWord> cache_renyi_star;
  mutable std::map<unsigned, std::vector<CReal>> cache_embeddings;
};

// Builds a base from integer polynomial coefficients (ascending order).
// The polynomial is reduced to its squarefree part and any factors x and
// x + 1 are removed (so that beta and beta + 1 stay invertible); the chosen
// root must be real and > 1.
BasePtr make_base(const std::vector<Int>& coeffs, BaseOptions opt = {});

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(BasePtr ctx, std::vector<Rat> coords);

  static FieldElement zero(const BasePtr& ctx);
  static FieldElement one(const BasePtr& ctx);
  static FieldElement beta(const BasePtr& ctx);
  static FieldElement from_rat(const BasePtr& ctx, const Rat& q);
  static FieldElement from_int(const BasePtr& ctx, const Int& n);

  const BasePtr& ctx() const { return ctx_; }
  const std::vector<Rat>& coords() const { return coords_; }
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rat& s) const;
  FieldElement inverse() const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement pow(long e) const;
  FieldElement abs() const;

  // Exact queries; these refine the root interval as needed.
  int sign() const;
  bool is_zero() const;
  Int floor() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const;
  bool operator<=(const FieldElement& o) const;

  // Value at embedding k (0 = the defining real place), at the context's
  // embed_bits precision.
  CReal embed(unsigned k) const;
  Real approx() const;        // embedding 0, guaranteed real
  double approx_double() const;

  // Total order on coordinate vectors; used only as a container key.
  static bool coords_less(const FieldElement& a, const FieldElement& b);

 private:
  BasePtr ctx_;
  std::vector<Rat> coords_;
};

Int floor_beta(const BasePtr& ctx);
bool beta_is_integer(const BasePtr& ctx);
// Largest digit of positive-base expansions: ceil(beta) - 1.
int renyi_max_digit(const BasePtr& ctx);
// Largest digit of negative-base expansions: floor(beta).
int negbeta_max_digit(const BasePtr& ctx);

// All embeddings of beta (index 0 first, others sorted by ascending real
// part, then descending imaginary part), at the given precision.
const std::vector<CReal>& base_embeddings(const BasePtr& ctx, unsigned bits);

// Endpoints of the Ito-Sadahiro domain [l, r) = [-beta/(beta+1), 1/(beta+1)).
FieldElement domain_left(const BasePtr& ctx);
FieldElement domain_right(const BasePtr& ctx);

}  // namespace negabeta
