#include "negabeta/integer_sets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

// Incremental admissibility filter for a growing block. A suffix of the
// block stays "live" against a reference word while it matches the
// reference digit for digit; the first mismatch either settles it as safe
// (drop it) or as a violation (the digit is infeasible). Suffixes decided
// later by the appended zeros are settled by the full check at the leaf.
struct WindowState {
  std::vector<size_t> lo_live, hi_live;
};

class AltWindowTracker {
 public:
  AltWindowTracker(const DigitWord& lo, const DigitWord& hi)
      : lo_(&lo), hi_(&hi) {}

  bool advance(const WindowState& s, size_t t, int a, WindowState& ns) const {
    ns.lo_live.clear();
    ns.hi_live.clear();
    for (size_t i : s.lo_live) {
      size_t j = t - i;
      int rd = lo_->digit_at(j);
      if (a == rd)
        ns.lo_live.push_back(i);
      else if (alt_less_at(j, a, rd))
        return false;  // suffix fell below the floor word
    }
    for (size_t i : s.hi_live) {
      size_t j = t - i;
      int rd = hi_->digit_at(j);
      if (a == rd)
        ns.hi_live.push_back(i);
      else if (alt_less_at(j, rd, a))
        return false;  // suffix climbed above the ceiling word
    }
    int l0 = lo_->digit_at(0);
    if (a == l0)
      ns.lo_live.push_back(t);
    else if (alt_less_at(0, a, l0))
      return false;
    int h0 = hi_->digit_at(0);
    if (a == h0)
      ns.hi_live.push_back(t);
    else if (alt_less_at(0, h0, a))
      return false;
    return true;
  }

 private:
  const DigitWord* lo_;
  const DigitWord* hi_;
};

// Digits to try at 0-based position t, ordered so that the produced blocks
// come out alternate-ascending (ascending=true) or descending.
std::vector<int> digit_order(size_t t, int maxd, bool ascending) {
  std::vector<int> ds;
  bool high_first = (t % 2 == 0) == ascending;
  if (high_first)
    for (int a = maxd; a >= 0; --a) ds.push_back(a);
  else
    for (int a = 0; a <= maxd; ++a) ds.push_back(a);
  return ds;
}

}  // namespace

bool negbeta_integers_trivial(const BasePtr& ctx) {
  const DigitWord& d = reference_l(ctx);
  if (d.truncated)
    fail(ErrorKind::UndecidedReference,
         "reference word undecided within the budget");
  bool trivial = false;
  if (d.digit_at(0) == 1) {
    size_t limit = d.pre.size() + (d.per.empty() ? 1 : d.per.size()) + 1;
    for (size_t i = 1; i < limit; ++i) {
      if (d.digit_at(i) != 0) {
        trivial = d.digit_at(i) == 1 && (i + 1) % 2 == 0;
        break;
      }
    }
  }
  // Same question, answered analytically: collapse happens exactly for
  // beta below the golden ratio, i.e. beta^2 - beta - 1 < 0.
  FieldElement b = FieldElement::beta(ctx);
  bool below = (b * b - b - FieldElement::one(ctx)).sign() < 0;
  if (below != trivial)
    throw std::logic_error("triviality criteria disagree");
  return trivial;
}

namespace {

// Depth-first walk over valid blocks of the given length, children visited
// in alternate order. Returns false from the visitor to stop the walk.
void dfs_blocks(const BasePtr& ctx, size_t length, bool ascending,
                const std::function<bool(const std::vector<int>&)>& on_leaf,
                const std::vector<int>* lo_block,
                const std::vector<int>* hi_block) {
  const DigitWord& lo = reference_l(ctx);
  const DigitWord& hi = reference_r_star(ctx);
  if (lo.truncated)
    fail(ErrorKind::UndecidedReference,
         "reference word undecided within the budget");
  AltWindowTracker tracker(lo, hi);
  int maxd = negbeta_max_digit(ctx);

  std::vector<int> block;
  bool stopped = false;

  // match flags: prefix still equal to the corresponding bound prefix
  std::function<void(const WindowState&, bool, bool)> rec =
      [&](const WindowState& st, bool match_lo, bool match_hi) {
        if (stopped) return;
        size_t t = block.size();
        if (t == length) {
          if (is_admissible_negbeta(ctx, block))
            if (!on_leaf(block)) stopped = true;
          return;
        }
        WindowState ns;
        for (int a : digit_order(t, maxd, ascending)) {
          if (match_lo && lo_block) {
            int bd = (*lo_block)[t];
            if (a != bd && alt_less_at(t, a, bd)) continue;
          }
          if (match_hi && hi_block) {
            int bd = (*hi_block)[t];
            if (a != bd && alt_less_at(t, bd, a)) continue;
          }
          if (!tracker.advance(st, t, a, ns)) continue;
          block.push_back(a);
          rec(ns, match_lo && lo_block && a == (*lo_block)[t],
              match_hi && hi_block && a == (*hi_block)[t]);
          block.pop_back();
          if (stopped) return;
        }
      };
  rec(WindowState{}, true, true);
}

}  // namespace

std::vector<int> min_word(const BasePtr& ctx, size_t k) {
  std::vector<int> out;
  bool found = false;
  dfs_blocks(ctx, k, /*ascending=*/true,
             [&](const std::vector<int>& b) {
               out = b;
               found = true;
               return false;
             },
             nullptr, nullptr);
  if (!found) throw std::logic_error("no valid block of requested length");
  return out;
}

std::vector<int> max_word(const BasePtr& ctx, size_t k) {
  std::vector<int> out;
  bool found = false;
  dfs_blocks(ctx, k, /*ascending=*/false,
             [&](const std::vector<int>& b) {
               out = b;
               found = true;
               return false;
             },
             nullptr, nullptr);
  if (!found) throw std::logic_error("no valid block of requested length");
  return out;
}

std::vector<std::vector<int>> all_blocks(const BasePtr& ctx, size_t k) {
  std::vector<std::vector<int>> out;
  dfs_blocks(ctx, k, true,
             [&](const std::vector<int>& b) {
               out.push_back(b);
               return true;
             },
             nullptr, nullptr);
  return out;
}

std::vector<std::vector<int>> blocks_in_interval(const BasePtr& ctx, size_t k,
                                                 const std::vector<int>& lo,
                                                 const std::vector<int>& hi) {
  if (lo.size() != k || hi.size() != k)
    throw std::logic_error("interval bounds must have block length");
  std::vector<std::vector<int>> out;
  dfs_blocks(ctx, k, true,
             [&](const std::vector<int>& b) {
               out.push_back(b);
               return true;
             },
             &lo, &hi);
  return out;
}

std::vector<int> extremal_block_with_first(const BasePtr& ctx, size_t k,
                                           bool least, int first) {
  if (k == 0) throw std::logic_error("block length must be positive");
  int maxd = negbeta_max_digit(ctx);
  // Envelope bounds: position 0 pinned to `first`, every later position
  // spans the full digit range in alternate order.
  std::vector<int> lo(k), hi(k);
  lo[0] = hi[0] = first;
  for (size_t t = 1; t < k; ++t) {
    lo[t] = t % 2 == 0 ? maxd : 0;
    hi[t] = t % 2 == 0 ? 0 : maxd;
  }
  std::vector<int> out;
  dfs_blocks(ctx, k, least,
             [&](const std::vector<int>& b) {
               out = b;
               return false;
             },
             &lo, &hi);
  return out;
}

FieldElement delta_gap(const BasePtr& ctx, size_t k, DeltaMethod method) {
  RefInfo info = reference_info(ctx);
  if (method == DeltaMethod::Auto) {
    switch (info.cls) {
      case RefClass::InfiniteHyp: method = DeltaMethod::Series; break;
      case RefClass::Finite: method = DeltaMethod::FiniteTable; break;
      case RefClass::Neither: method = DeltaMethod::Definition; break;
    }
  }

  FieldElement one = FieldElement::one(ctx);
  if (k == 0) return one;

  switch (method) {
    case DeltaMethod::Definition: {
      FieldElement mbk = (-FieldElement::beta(ctx)).pow(static_cast<long>(k));
      FieldElement vmin = gamma_negbeta(ctx, min_word(ctx, k));
      FieldElement vmax = gamma_negbeta(ctx, max_word(ctx, k));
      return (mbk + vmin - vmax).abs();
    }
    case DeltaMethod::Series: {
      if (info.cls != RefClass::InfiniteHyp)
        fail(ErrorKind::HypothesisViolated,
             "digit-difference series needs the positive periodic digit "
             "hypothesis");
      const DigitWord& d = reference_l(ctx);
      FieldElement vk1 = word_value_negbeta(ctx, shift_word(d, k - 1));
      FieldElement vk = word_value_negbeta(ctx, shift_word(d, k));
      FieldElement sgn = (k % 2 == 0) ? one : -one;
      return (sgn + vk1 - vk).abs();
    }
    case DeltaMethod::Orbit: {
      if (info.cls != RefClass::InfiniteHyp)
        fail(ErrorKind::HypothesisViolated,
             "orbit form needs the positive periodic digit hypothesis");
      FieldElement a = orbit_point_l(ctx, k - 1);
      FieldElement b = orbit_point_l(ctx, k);
      FieldElement sgn = (k % 2 == 0) ? one : -one;
      return (sgn + a - b).abs();
    }
    case DeltaMethod::FiniteTable: {
      if (info.cls != RefClass::Finite)
        fail(ErrorKind::HypothesisViolated,
             "case table applies to finite reference words only");
      const DigitWord& d = reference_l(ctx);
      size_t m = info.m;
      FieldElement binv = FieldElement::beta(ctx).inverse();
      if (k < m) {
        // same digit-difference sum as the periodic case; the tail is finite
        FieldElement vk1 = word_value_negbeta(ctx, shift_word(d, k - 1));
        FieldElement vk = word_value_negbeta(ctx, shift_word(d, k));
        FieldElement sgn = (k % 2 == 0) ? one : -one;
        return (sgn + vk1 - vk).abs();
      }
      if (k == m) {
        FieldElement dm =
            FieldElement::from_rat(ctx, Rat(d.pre.back())) * binv;
        return (m % 2 == 0) ? one - dm : dm;
      }
      if (k == m + 1) {
        bool matches = d.pre.back() == d.pre.front() - 1;
        return delta_gap(ctx, matches ? 1 : 0, DeltaMethod::FiniteTable);
      }
      return delta_gap(ctx, k % 2 == 1 ? 0 : 1, DeltaMethod::FiniteTable);
    }
    case DeltaMethod::Auto:
      break;
  }
  throw std::logic_error("unreachable delta method");
}

std::vector<GapCoincidence> gap_coincidences(const BasePtr& ctx, size_t kmax) {
  RefInfo info = reference_info(ctx);
  std::vector<GapCoincidence> out;
  auto push = [&](size_t from, size_t to, bool refl) {
    if (from <= kmax) out.push_back({from, to, refl});
  };

  if (info.cls == RefClass::InfiniteHyp) {
    size_t m = info.m, p = info.p;
    if (p == 1) {
      for (size_t k = 1; m + k <= kmax; ++k) push(m + k, 0, false);
    } else if (p == 2) {
      for (size_t k = 2; m + k <= kmax; ++k) push(m + k, m + 1, false);
    } else if (p % 2 == 0) {
      for (size_t k = 1; m + p + k <= kmax; ++k)
        push(m + p + k, m + k, false);
    } else {
      for (size_t k = 1; m + p + k <= kmax; ++k)
        push(m + p + k, m + k, true);
      for (size_t k = 1; m + 2 * p + k <= kmax; ++k)
        push(m + 2 * p + k, m + k, false);
    }
  } else if (info.cls == RefClass::Finite) {
    size_t m = info.m;
    const DigitWord& d = reference_l(ctx);
    bool matches = d.pre.back() == d.pre.front() - 1;
    if (m + 1 <= kmax) push(m + 1, matches ? 1 : 0, false);
    for (size_t k = m + 2; k <= kmax; ++k) push(k, k % 2 == 1 ? 0 : 1, false);
  }

  // Every claim is proved exactly before being reported.
  FieldElement two = FieldElement::from_rat(ctx, Rat(2));
  for (const auto& c : out) {
    FieldElement lhs = delta_gap(ctx, c.k_from);
    FieldElement rhs = delta_gap(ctx, c.k_to);
    if (c.reflected) rhs = two - rhs;
    if (!(lhs == rhs))
      throw std::logic_error("gap coincidence failed exact verification");
  }
  return out;
}

size_t gap_letter(const std::vector<int>& a, const std::vector<int>& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t idx = 0; idx < n; ++idx) {
    int da = idx < n - a.size() ? 0 : a[idx - (n - a.size())];
    int db = idx < n - b.size() ? 0 : b[idx - (n - b.size())];
    if (da != db) return n - 1 - idx;
  }
  throw std::logic_error("equal blocks have no gap letter");
}

namespace {

std::vector<int> strip_leading_zeros(std::vector<int> v) {
  size_t i = 0;
  while (i + 1 < v.size() && v[i] == 0) ++i;
  v.erase(v.begin(), v.begin() + i);
  if (v.empty()) v.push_back(0);
  return v;
}

// Precomputed per-level tail bounds: M[e] bounds the absolute value any
// completion with maximal exponent e can contribute.
std::vector<Rat> tail_bounds(const BasePtr& ctx, size_t length, int maxd) {
  // crude but rigorous upper rational bound for beta
  auto [ilo, ihi] =
      refine_root_interval(ctx->modulus, ctx->iso_lo, ctx->iso_hi,
                           Rat(1, 1024));
  (void)ilo;
  Rat bhi = ihi;
  std::vector<Rat> M(length + 1, Rat(0));
  Rat pw(1);
  for (size_t e = 0; e < length; ++e) {
    M[e + 1] = M[e] + Rat(maxd) * pw;
    pw *= bhi;
  }
  return M;  // M[n] bounds n remaining digits (exponents 0..n-1)
}

struct RawPoint {
  std::vector<int> digits;
  FieldElement value;
};

// All values of valid length-L blocks with |value| <= radius, one entry per
// distinct value. When two blocks share a value the zero-prefixable one is
// kept.
std::vector<RawPoint> collect_negbeta(const BasePtr& ctx, size_t length,
                                      const Rat& radius) {
  const DigitWord& lo = reference_l(ctx);
  const DigitWord& hi = reference_r_star(ctx);
  AltWindowTracker tracker(lo, hi);
  int maxd = negbeta_max_digit(ctx);
  std::vector<Rat> M = tail_bounds(ctx, length, maxd);

  FieldElement mb = -FieldElement::beta(ctx);
  std::vector<FieldElement> pw;  // (-beta)^e
  pw.push_back(FieldElement::one(ctx));
  for (size_t e = 1; e < length; ++e) pw.push_back(pw.back() * mb);

  std::vector<RawPoint> out;
  std::map<std::vector<Rat>, size_t> by_value;
  std::vector<int> block;

  std::function<void(const WindowState&, const FieldElement&)> rec =
      [&](const WindowState& st, const FieldElement& partial) {
        size_t t = block.size();
        if (t == length) {
          FieldElement av = partial.abs();
          if (!(av <= FieldElement::from_rat(ctx, radius))) return;
          if (!is_admissible_negbeta(ctx, block)) return;
          auto key = partial.coords();
          auto it = by_value.find(key);
          if (it == by_value.end()) {
            by_value.emplace(key, out.size());
            out.push_back({strip_leading_zeros(block), partial});
          } else {
            // prefer the block that stays valid under a zero prefix
            std::vector<int> padded = block;
            padded.insert(padded.begin(), 0);
            if (is_admissible_negbeta(ctx, padded))
              out[it->second].digits = strip_leading_zeros(block);
          }
          return;
        }
        // prune when even the loosest completion cannot reach the window
        auto poly = Poly(partial.coords());
        auto [plo, phi] = poly.eval_interval(ctx->iso_lo, ctx->iso_hi);
        size_t rem = length - t;
        if (plo - M[rem] > radius || phi + M[rem] < -radius) return;

        WindowState ns;
        for (int a = 0; a <= maxd; ++a) {
          if (!tracker.advance(st, t, a, ns)) continue;
          block.push_back(a);
          FieldElement next =
              a == 0 ? partial
                     : partial + pw[length - t - 1] *
                                     FieldElement::from_rat(ctx, Rat(a));
          rec(ns, next);
          block.pop_back();
        }
      };
  rec(WindowState{}, FieldElement::zero(ctx));
  return out;
}

size_t negbeta_block_length(const BasePtr& ctx, const Rat& radius) {
  // largest n with beta^{n-1} <= radius * (beta + 1)
  FieldElement b = FieldElement::beta(ctx);
  FieldElement bound =
      FieldElement::from_rat(ctx, radius) * (b + FieldElement::one(ctx));
  FieldElement p = FieldElement::one(ctx);
  size_t n = 0;
  while (p <= bound && n < 512) {
    ++n;
    p = p * b;
  }
  return n == 0 ? 1 : n;
}

IntegerWindow finish_window(std::vector<RawPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RawPoint& a, const RawPoint& b) {
    return a.value < b.value;
  });
  IntegerWindow w;
  for (auto& p : pts) w.points.push_back({std::move(p.digits), p.value});
  for (size_t i = 0; i + 1 < w.points.size(); ++i)
    w.gap_letters.push_back(
        gap_letter(w.points[i].digits, w.points[i + 1].digits));
  return w;
}

}  // namespace

IntegerWindow enumerate_negbeta_integers(const BasePtr& ctx,
                                         const Rat& radius) {
  if (negbeta_integers_trivial(ctx))
    fail(ErrorKind::TrivialSet, "the negative-base integers are {0}");
  size_t length = negbeta_block_length(ctx, radius);
  return finish_window(collect_negbeta(ctx, length, radius));
}

namespace {

class LexTracker {
 public:
  explicit LexTracker(const DigitWord& hi) : hi_(&hi) {}

  bool advance(const std::vector<size_t>& live, size_t t, int a,
               std::vector<size_t>& nlive) const {
    nlive.clear();
    for (size_t i : live) {
      size_t j = t - i;
      int rd = hi_->digit_at(j);
      if (a == rd)
        nlive.push_back(i);
      else if (a > rd)
        return false;
    }
    int h0 = hi_->digit_at(0);
    if (a == h0)
      nlive.push_back(t);
    else if (a > h0)
      return false;
    return true;
  }

 private:
  const DigitWord* hi_;
};

std::vector<RawPoint> collect_renyi(const BasePtr& ctx, size_t length,
                                    const Rat& radius) {
  const DigitWord& hi = renyi_one_star(ctx);
  LexTracker tracker(hi);
  int maxd = renyi_max_digit(ctx);

  FieldElement b = FieldElement::beta(ctx);
  std::vector<FieldElement> pw;
  pw.push_back(FieldElement::one(ctx));
  for (size_t e = 1; e < length; ++e) pw.push_back(pw.back() * b);

  std::vector<RawPoint> out;
  std::vector<int> block;
  FieldElement rad = FieldElement::from_rat(ctx, radius);

  std::function<void(const std::vector<size_t>&, const FieldElement&)> rec =
      [&](const std::vector<size_t>& live, const FieldElement& partial) {
        size_t t = block.size();
        if (t == length) {
          if (!(partial <= rad)) return;
          if (!is_admissible_renyi(ctx, block)) return;
          out.push_back({strip_leading_zeros(block), partial});
          return;
        }
        auto poly = Poly(partial.coords());
        auto [plo, phi] = poly.eval_interval(ctx->iso_lo, ctx->iso_hi);
        (void)phi;
        if (plo > radius) return;  // digits only add value

        std::vector<size_t> nlive;
        for (int a = 0; a <= maxd; ++a) {
          if (!tracker.advance(live, t, a, nlive)) continue;
          block.push_back(a);
          FieldElement next =
              a == 0 ? partial
                     : partial + pw[length - t - 1] *
                                     FieldElement::from_rat(ctx, Rat(a));
          rec(nlive, next);
          block.pop_back();
        }
      };
  rec({}, FieldElement::zero(ctx));
  return out;
}

}  // namespace

IntegerWindow enumerate_renyi_integers(const BasePtr& ctx, const Rat& radius,
                                       bool symmetric) {
  // largest n with beta^{n-1} <= radius
  FieldElement b = FieldElement::beta(ctx);
  FieldElement bound = FieldElement::from_rat(ctx, radius);
  FieldElement p = FieldElement::one(ctx);
  size_t length = 0;
  while (p <= bound && length < 512) {
    ++length;
    p = p * b;
  }
  if (length == 0) length = 1;

  std::vector<RawPoint> pos = collect_renyi(ctx, length, radius);
  if (!symmetric) return finish_window(std::move(pos));
  std::vector<RawPoint> all;
  for (const auto& pt : pos) {
    if (pt.value.sign() != 0) {
      all.push_back({pt.digits, -pt.value});
    }
    all.push_back(pt);
  }
  return finish_window(std::move(all));
}

FieldElement delta_gap_renyi(const BasePtr& ctx, size_t k) {
  const DigitWord& star = renyi_one_star(ctx);
  if (star.truncated)
    fail(ErrorKind::UndecidedReference,
         "quasi-greedy expansion of 1 undecided within the budget");
  return word_value_renyi(ctx, shift_word(star, k));
}

IntegerWindow window_with_count(const BasePtr& ctx, size_t count,
                                bool negative) {
  Rat radius(2);
  for (int rounds = 0; rounds < 256; ++rounds) {
    IntegerWindow w = negative
                          ? enumerate_negbeta_integers(ctx, radius)
                          : enumerate_renyi_integers(ctx, radius, true);
    if (w.points.size() >= count) return w;
    radius *= 2;
  }
  fail(ErrorKind::IoFailure, "window growth did not reach the requested count");
}

}  // namespace negabeta
