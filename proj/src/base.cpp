#include "negabeta/base.hpp"

#include <algorithm>
#include <stdexcept>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

Poly poly_from_coords(const std::vector<Rat>& coords) {
  return Poly(coords);
}

std::vector<Rat> coords_from_poly(const Poly& p, int degree) {
  std::vector<Rat> c(degree, Rat(0));
  for (int i = 0; i <= p.degree() && i < degree; ++i) c[i] = p.coeff(i);
  return c;
}

int sign_of(const Rat& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// True when g (a divisor of the modulus) vanishes at beta.
bool vanishes_at_beta(const BaseContext& ctx, const Poly& g) {
  if (g.degree() <= 0) return false;
  if (ctx.iso_lo == ctx.iso_hi) return g.eval(ctx.iso_lo) == 0;
  // Endpoints of the isolating interval are never roots of the modulus,
  // hence never roots of its divisor g.
  auto chain = sturm_chain(g);
  return sturm_count(chain, ctx.iso_lo, ctx.iso_hi) > 0;
}

struct ExtGcd {
  Poly g, s;  // s * a == g (mod b)
};

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Rat(1)), s1 = Poly();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return {r0, s0};
}

void require_same_ctx(const BasePtr& a, const BasePtr& b) {
  if (!a || !b || a.get() != b.get())
    throw std::logic_error("field elements from different bases");
}

// One notch of extra certainty on the isolating interval: 8 bisection steps.
void tighten_iso(const BaseContext& ctx) {
  auto& lo = const_cast<Rat&>(ctx.iso_lo);
  auto& hi = const_cast<Rat&>(ctx.iso_hi);
  if (lo == hi) return;
  auto [nlo, nhi] = refine_root_interval(ctx.modulus, lo, hi, (hi - lo) / 256);
  lo = nlo;
  hi = nhi;
}

Rat iso_width_budget(const BaseContext& ctx) {
  Rat w(1);
  w /= rat_pow(Rat(2), ctx.opt.precision_bits);
  return w;
}

}  // namespace

FieldElement::FieldElement(BasePtr ctx, std::vector<Rat> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (!ctx_) throw std::logic_error("null base context");
  coords_.resize(ctx_->degree, Rat(0));
}

FieldElement FieldElement::zero(const BasePtr& ctx) {
  return FieldElement(ctx, std::vector<Rat>(ctx->degree, Rat(0)));
}

FieldElement FieldElement::one(const BasePtr& ctx) {
  return from_rat(ctx, Rat(1));
}

FieldElement FieldElement::from_rat(const BasePtr& ctx, const Rat& q) {
  std::vector<Rat> c(ctx->degree, Rat(0));
  c[0] = q;
  return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::from_int(const BasePtr& ctx, const Int& n) {
  return from_rat(ctx, Rat(n));
}

FieldElement FieldElement::beta(const BasePtr& ctx) {
  Poly x = Poly::x() % ctx->modulus;
  return FieldElement(ctx, coords_from_poly(x, ctx->degree));
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rat FieldElement::rational_value() const {
  if (!is_rational()) throw std::logic_error("element is not rational");
  return coords_.empty() ? Rat(0) : coords_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_ctx(ctx_, o.ctx_);
  std::vector<Rat> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator-() const {
  std::vector<Rat> c(coords_);
  for (auto& v : c) v = -v;
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_ctx(ctx_, o.ctx_);
  Poly prod = poly_from_coords(coords_) * poly_from_coords(o.coords_);
  prod = prod % ctx_->modulus;
  return FieldElement(ctx_, coords_from_poly(prod, ctx_->degree));
}

FieldElement FieldElement::operator*(const Rat& s) const {
  std::vector<Rat> c(coords_);
  for (auto& v : c) v *= s;
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  Poly a = poly_from_coords(coords_);
  if (a.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  ExtGcd eg = ext_gcd(a, ctx_->modulus);
  if (eg.g.degree() > 0) {
    if (vanishes_at_beta(*ctx_, eg.g))
      fail(ErrorKind::DivisionByZero, "inverse of an element that is zero at beta");
    fail(ErrorKind::NonInvertible,
         "element shares a factor with the modulus away from beta");
  }
  Poly inv = (eg.s * (Rat(1) / eg.g.coeff(0))) % ctx_->modulus;
  return FieldElement(ctx_, coords_from_poly(inv, ctx_->degree));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_ctx(ctx_, o.ctx_);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = one(ctx_);
  FieldElement b = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1ul) r = r * b;
    b = b * b;
    n >>= 1ul;
  }
  return r;
}

FieldElement FieldElement::abs() const { return sign() < 0 ? -*this : *this; }

int FieldElement::sign() const {
  bool any = false;
  for (const auto& v : coords_)
    if (v != 0) any = true;
  if (!any) return 0;
  Poly a = poly_from_coords(coords_);
  if (a.degree() == 0) return sign_of(a.coeff(0));
  if (ctx_->iso_lo == ctx_->iso_hi) return sign_of(a.eval(ctx_->iso_lo));

  // With a reducible modulus the value can vanish even though the
  // coordinates do not; settle that exactly before refining.
  Poly g = poly_gcd(a, ctx_->modulus);
  if (g.degree() > 0 && vanishes_at_beta(*ctx_, g)) return 0;

  const Rat budget = iso_width_budget(*ctx_);
  while (true) {
    auto [lo, hi] = a.eval_interval(ctx_->iso_lo, ctx_->iso_hi);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (ctx_->iso_lo == ctx_->iso_hi) return sign_of(a.eval(ctx_->iso_lo));
    if (ctx_->iso_hi - ctx_->iso_lo < budget)
      fail(ErrorKind::RefinementBudgetExceeded,
           "sign undecided at the configured precision");
    tighten_iso(*ctx_);
  }
}

bool FieldElement::is_zero() const { return sign() == 0; }

Int FieldElement::floor() const {
  Poly a = poly_from_coords(coords_);
  if (is_rational()) return rat_floor(coords_.empty() ? Rat(0) : coords_[0]);
  const Rat budget = iso_width_budget(*ctx_);
  while (true) {
    auto [lo, hi] = a.eval_interval(ctx_->iso_lo, ctx_->iso_hi);
    Int fl = rat_floor(lo), fh = rat_floor(hi);
    if (fl == fh) return fl;
    if (fh - fl == 1) {
      // The value is near the integer fh; decide the side exactly.
      int s = (*this - from_int(ctx_, fh)).sign();
      return s >= 0 ? fh : fl;
    }
    if (ctx_->iso_lo == ctx_->iso_hi)
      return rat_floor(a.eval(ctx_->iso_lo));
    if (ctx_->iso_hi - ctx_->iso_lo < budget)
      fail(ErrorKind::RefinementBudgetExceeded,
           "floor undecided at the configured precision");
    tighten_iso(*ctx_);
  }
}

bool FieldElement::operator==(const FieldElement& o) const {
  require_same_ctx(ctx_, o.ctx_);
  if (coords_ == o.coords_) return true;
  return (*this - o).sign() == 0;
}

bool FieldElement::operator<(const FieldElement& o) const {
  return (*this - o).sign() < 0;
}

bool FieldElement::operator<=(const FieldElement& o) const {
  return (*this - o).sign() <= 0;
}

bool FieldElement::coords_less(const FieldElement& a, const FieldElement& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                      b.coords_.begin(), b.coords_.end());
}

Real FieldElement::approx() const {
  PrecisionGuard guard(ctx_->opt.embed_bits + 32);
  Rat w(1);
  w /= rat_pow(Rat(2), ctx_->opt.embed_bits + 8);
  auto [lo, hi] =
      refine_root_interval(ctx_->modulus, ctx_->iso_lo, ctx_->iso_hi, w);
  Rat mid = (lo + hi) / 2;
  return poly_from_coords(coords_).eval_real(to_real(mid));
}

double FieldElement::approx_double() const {
  return static_cast<double>(approx());
}

CReal FieldElement::embed(unsigned k) const {
  const auto& roots = base_embeddings(ctx_, ctx_->opt.embed_bits);
  if (k >= roots.size())
    fail(ErrorKind::BadEmbeddingIndex,
         "embedding index " + std::to_string(k) + " out of range");
  PrecisionGuard guard(ctx_->opt.embed_bits + 32);
  return poly_from_coords(coords_).eval_creal(roots[k]);
}

namespace {

std::vector<CReal> compute_embeddings(const BaseContext& ctx, unsigned bits) {
  PrecisionGuard guard(bits + 64);
  const Poly& p = ctx.modulus;
  int deg = p.degree();

  Rat w(1);
  w /= rat_pow(Rat(2), bits + 8);

  // Rigorous real roots.
  auto real_ivs = isolate_real_roots(p);
  std::vector<Real> reals;
  size_t beta_idx = real_ivs.size();
  auto [blo, bhi] = refine_root_interval(p, ctx.iso_lo, ctx.iso_hi, w);
  for (size_t i = 0; i < real_ivs.size(); ++i) {
    auto [lo, hi] = refine_root_interval(p, real_ivs[i].first,
                                         real_ivs[i].second, w);
    reals.push_back(to_real((lo + hi) / 2));
    if (hi >= blo && lo <= bhi) beta_idx = i;
  }
  if (beta_idx == real_ivs.size())
    throw std::logic_error("lost track of the defining root");

  // All roots numerically, then swap in the rigorous real values.
  std::vector<CReal> dk(deg);
  Real bound = to_real(cauchy_root_bound(p));
  for (int i = 0; i < deg; ++i) {
    // spread the starting points on a spiral inside the root bound
    double a = 0.7 + 1.9 * i;
    dk[i] = CReal(bound * Real(0.6 + 0.3 * ((i * 29) % 7) / 7.0) * Real(cos(Real(a))),
                  bound * Real(0.6 + 0.3 * ((i * 17) % 5) / 5.0) * Real(sin(Real(a))) + Real(0.05));
  }
  Poly mon = p.monic();
  Real eps = Real(1);
  for (unsigned i = 0; i < bits + 16; ++i) eps /= 2;
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst(0);
    for (int i = 0; i < deg; ++i) {
      CReal num = mon.eval_creal(dk[i]);
      CReal den(Real(1), Real(0));
      for (int j = 0; j < deg; ++j)
        if (j != i) den = den * (dk[i] - dk[j]);
      CReal delta = num / den;
      dk[i] = dk[i] - delta;
      worst = std::max(worst, delta.abs());
    }
    if (worst < eps) break;
  }

  // Match each rigorous real root to its nearest numeric twin.
  std::vector<bool> taken(deg, false);
  std::vector<size_t> real_slot(reals.size());
  for (size_t r = 0; r < reals.size(); ++r) {
    size_t best = 0;
    Real bd(-1);
    for (int i = 0; i < deg; ++i) {
      if (taken[i]) continue;
      Real d = (dk[i] - CReal(reals[r], Real(0))).abs();
      if (bd < 0 || d < bd) {
        bd = d;
        best = i;
      }
    }
    taken[best] = true;
    dk[best] = CReal(reals[r], Real(0));
    real_slot[r] = best;
  }

  std::vector<CReal> out;
  out.push_back(dk[real_slot[beta_idx]]);
  std::vector<CReal> rest;
  for (int i = 0; i < deg; ++i)
    if (i != static_cast<int>(real_slot[beta_idx])) rest.push_back(dk[i]);
  std::sort(rest.begin(), rest.end(), [](const CReal& a, const CReal& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im > b.im;
  });
  for (auto& r : rest) out.push_back(r);
  return out;
}

}  // namespace

const std::vector<CReal>& base_embeddings(const BasePtr& ctx, unsigned bits) {
  auto it = ctx->cache_embeddings.find(bits);
  if (it == ctx->cache_embeddings.end()) {
    it = ctx->cache_embeddings.emplace(bits, compute_embeddings(*ctx, bits))
             .first;
  }
  return it->second;
}

BasePtr make_base(const std::vector<Int>& coeffs, BaseOptions opt) {
  std::vector<Rat> rc;
  rc.reserve(coeffs.size());
  for (const auto& c : coeffs) rc.emplace_back(c);
  Poly p{std::vector<Rat>(rc)};
  if (p.degree() < 1)
    fail(ErrorKind::DegenerateDegree, "polynomial must have degree >= 1");

  p = squarefree_part(p);
  // beta is none of 0, -1, 1, and we need 1/beta and 1/(beta+1) to exist in
  // the quotient ring, so drop those factors entirely.
  Poly x = Poly::x();
  Poly xp1 = Poly({Rat(1), Rat(1)});
  Poly xm1 = Poly({Rat(-1), Rat(1)});
  while (p.degree() > 0 && p.eval(Rat(0)) == 0) p = p / x;
  while (p.degree() > 0 && p.eval(Rat(-1)) == 0) p = p / xp1;
  while (p.degree() > 0 && p.eval(Rat(1)) == 0) p = p / xm1;
  if (p.degree() < 1)
    fail(ErrorKind::DegenerateDegree,
         "polynomial has no factor besides x, x-1 and x+1");
  p = p.monic();

  auto roots = isolate_real_roots(p);
  // Narrow every interval until it no longer straddles 1, so "root > 1" is
  // decidable per interval (1 itself is never a root after the stripping).
  std::vector<std::pair<Rat, Rat>> narrowed;
  for (auto [lo, hi] : roots) {
    while (lo < 1 && hi > 1) {
      auto [nlo, nhi] = refine_root_interval(p, lo, hi, (hi - lo) / 4);
      lo = nlo;
      hi = nhi;
    }
    narrowed.emplace_back(lo, hi);
  }

  int chosen = -1;
  if (opt.root_index.has_value()) {
    int idx = *opt.root_index;
    if (idx < 0 || idx >= static_cast<int>(narrowed.size()))
      fail(ErrorKind::NoSuchRoot, "root index out of range");
    chosen = idx;
  } else {
    chosen = static_cast<int>(narrowed.size()) - 1;  // largest real root
  }
  if (chosen < 0) fail(ErrorKind::NoSuchRoot, "no real roots");
  auto [lo, hi] = narrowed[chosen];
  bool above_one = (lo == hi) ? (lo > 1) : (lo >= 1);
  if (!above_one)
    fail(ErrorKind::NoSuchRoot, "selected root is not a real number > 1");

  auto ctx = std::make_shared<BaseContext>();
  ctx->modulus = p;
  ctx->degree = p.degree();
  ctx->iso_lo = lo;
  ctx->iso_hi = hi;
  ctx->sturm = sturm_chain(p);
  ctx->opt = opt;

  // primitive integer form of the reduced modulus, for display
  Int denlcm(1);
  for (const auto& c : p.coeffs()) denlcm = lcm(denlcm, denominator(c));
  Int content(0);
  std::vector<Int> ic;
  for (const auto& c : p.coeffs()) {
    Int v = numerator(c) * (denlcm / denominator(c));
    ic.push_back(v);
    content = gcd(content, v);
  }
  if (content == 0) content = 1;
  for (auto& v : ic) v /= content;
  if (!ic.empty() && ic.back() < 0)
    for (auto& v : ic) v = -v;
  ctx->modulus_int = std::move(ic);

  return ctx;
}

Int floor_beta(const BasePtr& ctx) {
  if (!ctx->cache_floor_beta)
    ctx->cache_floor_beta = FieldElement::beta(ctx).floor();
  return *ctx->cache_floor_beta;
}

bool beta_is_integer(const BasePtr& ctx) {
  if (!ctx->cache_beta_integer) {
    FieldElement b = FieldElement::beta(ctx);
    ctx->cache_beta_integer =
        b.is_rational() && denominator(b.rational_value()) == 1;
  }
  return *ctx->cache_beta_integer;
}

int renyi_max_digit(const BasePtr& ctx) {
  Int fl = floor_beta(ctx);
  if (beta_is_integer(ctx)) return static_cast<int>(fl) - 1;
  return static_cast<int>(fl);
}

int negbeta_max_digit(const BasePtr& ctx) {
  return static_cast<int>(floor_beta(ctx));
}

FieldElement domain_left(const BasePtr& ctx) {
  FieldElement b = FieldElement::beta(ctx);
  FieldElement bp1 = b + FieldElement::one(ctx);
  return -(b / bp1);
}

FieldElement domain_right(const BasePtr& ctx) {
  FieldElement b = FieldElement::beta(ctx);
  FieldElement bp1 = b + FieldElement::one(ctx);
  return FieldElement::one(ctx) / bp1;
}

}  // namespace negabeta
