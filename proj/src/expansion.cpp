#include "negabeta/expansion.hpp"

#include <map>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

using CoordKey = std::vector<Rat>;

// Orbit of a map x -> (digit, next), stopping on zero, on a revisited
// point, or on budget exhaustion.
template <typename StepFn>
DigitWord run_orbit(FieldElement x, size_t budget, StepFn step) {
  std::vector<int> digits;
  std::map<CoordKey, size_t> seen;
  for (size_t i = 0; i < budget; ++i) {
    if (x.is_zero()) return finite_word(std::move(digits));
    auto it = seen.find(x.coords());
    if (it != seen.end()) {
      std::vector<int> pre(digits.begin(), digits.begin() + it->second);
      std::vector<int> per(digits.begin() + it->second, digits.end());
      return periodic_word(std::move(pre), std::move(per));
    }
    seen.emplace(x.coords(), i);
    StepResult s = step(x);
    digits.push_back(s.digit);
    x = s.next;
  }
  DigitWord w;
  w.pre = std::move(digits);
  w.truncated = true;
  return w;
}

}  // namespace

StepResult step_negbeta(const FieldElement& x) {
  const BasePtr& ctx = x.ctx();
  FieldElement b = FieldElement::beta(ctx);
  FieldElement shifted = -(b * x) - domain_left(ctx);  // -beta*x + beta/(beta+1)
  Int d = shifted.floor();
  FieldElement next = -(b * x) - FieldElement::from_int(ctx, d);
  return {static_cast<int>(d), next};
}

StepResult step_renyi(const FieldElement& x) {
  const BasePtr& ctx = x.ctx();
  FieldElement b = FieldElement::beta(ctx);
  FieldElement bx = b * x;
  Int d = bx.floor();
  return {static_cast<int>(d), bx - FieldElement::from_int(ctx, d)};
}

DigitWord expand_negbeta(const BasePtr& ctx, const FieldElement& x) {
  FieldElement l = domain_left(ctx);
  FieldElement r = domain_right(ctx);
  if (x < l || !(x < r))
    fail(ErrorKind::OutOfDomain,
         "point lies outside [-beta/(beta+1), 1/(beta+1))");
  return run_orbit(x, ctx->opt.orbit_budget,
                   [](const FieldElement& p) { return step_negbeta(p); });
}

DigitWord expand_renyi(const BasePtr& ctx, const FieldElement& x) {
  if (x.sign() < 0 || !(x < FieldElement::one(ctx)))
    fail(ErrorKind::OutOfDomain, "point lies outside [0, 1)");
  return run_orbit(x, ctx->opt.orbit_budget,
                   [](const FieldElement& p) { return step_renyi(p); });
}

const DigitWord& reference_l(const BasePtr& ctx) {
  if (!ctx->cache_ref_l)
    ctx->cache_ref_l = expand_negbeta(ctx, domain_left(ctx));
  return *ctx->cache_ref_l;
}

const DigitWord& reference_r_star(const BasePtr& ctx) {
  if (!ctx->cache_ref_r_star) {
    const DigitWord& d = reference_l(ctx);
    if (d.truncated)
      fail(ErrorKind::UndecidedReference,
           "left endpoint orbit undecided within the budget");
    DigitWord star;
    if (!d.is_finite() && d.pre.empty() && d.per.size() % 2 == 1) {
      std::vector<int> per;
      per.push_back(0);
      per.insert(per.end(), d.per.begin(), d.per.end());
      per.back() -= 1;
      star = periodic_word({}, std::move(per));
    } else {
      std::vector<int> pre;
      pre.push_back(0);
      pre.insert(pre.end(), d.pre.begin(), d.pre.end());
      star.pre = std::move(pre);
      star.per = d.per;
      star = normalize(std::move(star));
    }
    ctx->cache_ref_r_star = std::move(star);
  }
  return *ctx->cache_ref_r_star;
}

const DigitWord& renyi_one(const BasePtr& ctx) {
  if (!ctx->cache_renyi) {
    FieldElement b = FieldElement::beta(ctx);
    Int t1 = floor_beta(ctx);
    FieldElement x = b - FieldElement::from_int(ctx, t1);
    DigitWord tail = run_orbit(x, ctx->opt.orbit_budget, [](const FieldElement& p) {
      return step_renyi(p);
    });
    DigitWord d;
    d.pre.push_back(static_cast<int>(t1));
    d.pre.insert(d.pre.end(), tail.pre.begin(), tail.pre.end());
    d.per = tail.per;
    d.truncated = tail.truncated;
    if (!d.truncated) d = normalize(std::move(d));
    ctx->cache_renyi = std::move(d);
  }
  return *ctx->cache_renyi;
}

const DigitWord& renyi_one_star(const BasePtr& ctx) {
  if (!ctx->cache_renyi_star) {
    const DigitWord& d = renyi_one(ctx);
    if (d.truncated)
      fail(ErrorKind::UndecidedReference,
           "expansion of 1 undecided within the budget");
    if (d.is_finite()) {
      std::vector<int> per = d.pre;
      per.back() -= 1;
      ctx->cache_renyi_star = periodic_word({}, std::move(per));
    } else {
      ctx->cache_renyi_star = d;
    }
  }
  return *ctx->cache_renyi_star;
}

RefInfo reference_info(const BasePtr& ctx) {
  const DigitWord& d = reference_l(ctx);
  if (d.truncated)
    fail(ErrorKind::UndecidedReference,
         "left endpoint orbit undecided within the budget");
  RefInfo info;
  info.m = d.pre.size();
  info.p = d.per.size();
  if (d.is_finite()) {
    info.cls = RefClass::Finite;
    return info;
  }
  size_t window = d.pre.size() + 2 * d.per.size();
  int d1 = d.digit_at(0);
  bool hyp = true;
  for (size_t i = 0; i < window && hyp; ++i) {
    if (d.digit_at(i) < 1) hyp = false;
    if (i % 2 == 1 && d.digit_at(i) >= d1) hyp = false;  // 1-based even spot
  }
  info.cls = hyp ? RefClass::InfiniteHyp : RefClass::Neither;
  return info;
}

FieldElement gamma_negbeta(const BasePtr& ctx, const std::vector<int>& digits) {
  FieldElement mb = -FieldElement::beta(ctx);
  FieldElement acc = FieldElement::zero(ctx);
  for (int d : digits) acc = acc * mb + FieldElement::from_rat(ctx, Rat(d));
  return acc;
}

FieldElement gamma_renyi(const BasePtr& ctx, const std::vector<int>& digits) {
  FieldElement b = FieldElement::beta(ctx);
  FieldElement acc = FieldElement::zero(ctx);
  for (int d : digits) acc = acc * b + FieldElement::from_rat(ctx, Rat(d));
  return acc;
}

namespace {
FieldElement word_value(const BasePtr& ctx, const DigitWord& w,
                        const FieldElement& y) {
  // sum over i>=1 of w_i y^i, exact through the periodic tail
  FieldElement acc = FieldElement::zero(ctx);
  FieldElement yp = FieldElement::one(ctx);
  for (int d : w.pre) {
    yp = yp * y;
    acc = acc + yp * FieldElement::from_rat(ctx, Rat(d));
  }
  if (!w.per.empty()) {
    FieldElement block = FieldElement::zero(ctx);
    FieldElement ypp = FieldElement::one(ctx);
    for (int d : w.per) {
      ypp = ypp * y;
      block = block + ypp * FieldElement::from_rat(ctx, Rat(d));
    }
    // tail = y^{|pre|} * block / (1 - y^{|per|})
    FieldElement denom = FieldElement::one(ctx) - ypp;
    acc = acc + yp * block / denom;
  }
  return acc;
}
}  // namespace

FieldElement word_value_negbeta(const BasePtr& ctx, const DigitWord& w) {
  if (w.truncated)
    fail(ErrorKind::UndecidedReference, "value of a truncated word");
  return word_value(ctx, w, FieldElement::beta(ctx).inverse() * Rat(-1));
}

FieldElement word_value_renyi(const BasePtr& ctx, const DigitWord& w) {
  if (w.truncated)
    fail(ErrorKind::UndecidedReference, "value of a truncated word");
  return word_value(ctx, w, FieldElement::beta(ctx).inverse());
}

namespace {
// Extend pre (unrolling the period) until it holds at least n digits.
void unroll_to(DigitWord& w, size_t n) {
  if (w.per.empty()) {
    if (w.pre.size() < n) w.pre.resize(n, 0);
    return;
  }
  size_t i = 0;
  while (w.pre.size() < n) {
    w.pre.push_back(w.per[i % w.per.size()]);
    ++i;
  }
  if (i > 0) {
    size_t off = i % w.per.size();
    std::vector<int> rotated(w.per.begin() + off, w.per.end());
    rotated.insert(rotated.end(), w.per.begin(), w.per.begin() + off);
    w.per = std::move(rotated);
  }
}
}  // namespace

PointedWord expand_real_negbeta(const BasePtr& ctx, const FieldElement& x) {
  PointedWord out;
  if (x.is_zero()) {
    out.word.pre = {0};
    out.int_len = 1;
    return out;
  }

  FieldElement b = FieldElement::beta(ctx);
  FieldElement bp1 = b + FieldElement::one(ctx);

  // Doubly representable targets: x = (-beta)^k / (beta+1) with k >= 1.
  // The minimal-exponent walk would land on the left endpoint and emit its
  // own digit string; the convention keeps the alternative starting 1d1d2...
  // so that prepending a zero to a stored word never breaks validity.
  {
    FieldElement y = x * bp1;
    FieldElement ay = y.abs();
    FieldElement bk = FieldElement::one(ctx);   // beta^k
    FieldElement sk = FieldElement::one(ctx);   // (-beta)^k
    for (long k = 0; !(ay < bk); ++k) {
      if (k >= 1 && sk == y) {
        const DigitWord& dl = reference_l(ctx);
        if (dl.truncated)
          fail(ErrorKind::UndecidedReference,
               "left endpoint orbit undecided within the budget");
        DigitWord w;
        w.pre.push_back(1);
        w.pre.insert(w.pre.end(), dl.pre.begin(), dl.pre.end());
        w.per = dl.per;
        unroll_to(w, static_cast<size_t>(k) + 1);
        out.word = std::move(w);
        out.int_len = static_cast<size_t>(k) + 1;
        return out;
      }
      bk = bk * b;
      sk = -(sk * b);
    }
  }

  FieldElement l = domain_left(ctx);
  FieldElement r = domain_right(ctx);
  FieldElement y = x;
  size_t ell = 0;
  while (y < l || !(y < r)) {
    y = -(y / b);
    ++ell;
  }
  DigitWord w = expand_negbeta(ctx, y);
  unroll_to(w, ell);
  out.word = std::move(w);
  out.int_len = ell;
  return out;
}

FieldElement orbit_point_l(const BasePtr& ctx, size_t k) {
  FieldElement x = domain_left(ctx);
  for (size_t i = 0; i < k; ++i) x = step_negbeta(x).next;
  return x;
}

}  // namespace negabeta
