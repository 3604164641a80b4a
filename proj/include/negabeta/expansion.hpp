#pragma once

#include <vector>

#include "negabeta/base.hpp"
#include "negabeta/words.hpp"

namespace negabeta {

struct StepResult {
  int digit;
  FieldElement next;
};

// One step of T_{-beta}(x) = -beta*x - floor(-beta*x + beta/(beta+1)) on
// [l, r); the digit is the floor term.
StepResult step_negbeta(const FieldElement& x);

// One greedy step T(x) = beta*x - floor(beta*x) on [0, 1).
StepResult step_renyi(const FieldElement& x);

// Expansion of the left endpoint l = -beta/(beta+1); the defining word of
// the admissibility window. Cached on the context.
const DigitWord& reference_l(const BasePtr& ctx);

// Ceiling word of the window (the limit word at the right endpoint):
// if reference_l is purely periodic of odd period 2t+1 it is
// (0 d_1 .. d_{2t} (d_{2t+1}-1))^inf, otherwise 0 followed by reference_l.
const DigitWord& reference_r_star(const BasePtr& ctx);

// Greedy expansion of 1 in base beta and its quasi-greedy form (finite
// t_1..t_m becomes (t_1..t_{m-1}(t_m-1))^inf; infinite stays itself).
const DigitWord& renyi_one(const BasePtr& ctx);
const DigitWord& renyi_one_star(const BasePtr& ctx);

enum class RefClass {
  InfiniteHyp,  // eventually periodic, every digit >= 1, d_1 > d_{2i}
  Finite,       // reference word ends in 0^inf
  Neither,
};

struct RefInfo {
  RefClass cls = RefClass::Neither;
  size_t m = 0;  // preperiod length (or full length when finite)
  size_t p = 0;  // period length, 0 when finite
};

RefInfo reference_info(const BasePtr& ctx);

// T_{-beta} expansion of x in [l, r); OutOfDomain otherwise. The word is
// marked truncated when the orbit budget is exhausted before a cycle.
DigitWord expand_negbeta(const BasePtr& ctx, const FieldElement& x);

// Rényi expansion of x in [0, 1).
DigitWord expand_renyi(const BasePtr& ctx, const FieldElement& x);

// Value of the digit string a_{n-1} ... a_0 (left to right) with digit a_i
// weighted by (-beta)^i, resp. beta^i.
FieldElement gamma_negbeta(const BasePtr& ctx, const std::vector<int>& digits);
FieldElement gamma_renyi(const BasePtr& ctx, const std::vector<int>& digits);

// Value of the fractional word: sum of w_i * (-beta)^{-i} (resp. beta^{-i})
// over i >= 1. Exact via the geometric tail of the period.
FieldElement word_value_negbeta(const BasePtr& ctx, const DigitWord& w);
FieldElement word_value_renyi(const BasePtr& ctx, const DigitWord& w);

// Pointed two-sided expansion of an arbitrary element: int_len digits sit
// left of the point (exponents int_len-1 down to 0), the rest are
// fractional. Word is kept as constructed (no trailing-zero stripping of
// the integer part). For the doubly-representable values
// (-beta)^k/(beta+1), k >= 1, the form starting 1 d_1 d_2 ... (the one that
// stays admissible when prefixed with zeros) is returned.
struct PointedWord {
  DigitWord word;
  size_t int_len = 0;
};

PointedWord expand_real_negbeta(const BasePtr& ctx, const FieldElement& x);

// k-th point of the left-endpoint orbit, T^k(l).
FieldElement orbit_point_l(const BasePtr& ctx, size_t k);

}  // namespace negabeta
